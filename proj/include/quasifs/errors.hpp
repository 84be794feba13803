/*
   Copyright 2026 The quasifs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace quasifs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QUASIFS_DEFINE_ERROR(Name)                   \
    class Name : public Error {                      \
    public:                                          \
        explicit Name(const std::string& what)       \
            : Error(std::string(#Name ": ") + what) {} \
    }

// exact-field
QUASIFS_DEFINE_ERROR(DivisionByZero);
QUASIFS_DEFINE_ERROR(FieldMismatch);

// exact-linalg
QUASIFS_DEFINE_ERROR(Singular);
QUASIFS_DEFINE_ERROR(LegMismatch);
QUASIFS_DEFINE_ERROR(ShapeMismatch);

// qha-core
QUASIFS_DEFINE_ERROR(NoIntegral);
QUASIFS_DEFINE_ERROR(NotNormalizable);
QUASIFS_DEFINE_ERROR(AmbiguousIntegral);

// rep-theory
QUASIFS_DEFINE_ERROR(ParentMismatch);
QUASIFS_DEFINE_ERROR(NotInvariant);
QUASIFS_DEFINE_ERROR(NotIntertwiner);

// indicator
QUASIFS_DEFINE_ERROR(NoUniqueSolution);
QUASIFS_DEFINE_ERROR(OracleInconsistent);

// builders
QUASIFS_DEFINE_ERROR(InvalidGroup);
QUASIFS_DEFINE_ERROR(InvalidCocycle);
QUASIFS_DEFINE_ERROR(CompletionFailed);

// cli-io
QUASIFS_DEFINE_ERROR(ParseError);
QUASIFS_DEFINE_ERROR(DimensionError);

#undef QUASIFS_DEFINE_ERROR

} // namespace quasifs
