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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "quasifs/group.hpp"
#include "quasifs/module.hpp"

namespace quasifs {

using Json = nlohmann::ordered_json;

/// Optional group metadata: the basis of a group algebra is indexed by the
/// elements, that of a twisted dual by their delta functions.
struct GroupInfo {
    std::string kind; // "group-algebra" or "twisted-dual"
    GroupTable table;
};

/// A parsed bundle. `data` is exactly what the file held (phi_inv may be
/// absent); `algebra` is built from it.
struct Bundle {
    QuasiHopfData data;
    AlgebraPtr algebra;
    std::vector<HModule> modules;
    std::optional<GroupInfo> group;
    std::string provenance;

    const HModule* find_module(std::string_view name) const;
};

/// Largest accepted algebra dimension: QUASIFS_MAX_DIM, default 64.
std::size_t max_dimension();

/// Parses and dimension-checks a bundle. Does not validate axioms. Throws
/// ParseError (with position or field path) and DimensionError.
Bundle parse_bundle(std::string_view text);
Bundle load_bundle(const std::filesystem::path& path);

Bundle make_bundle(const AlgebraPtr& algebra, std::vector<HModule> modules, std::optional<GroupInfo> group = {},
                   std::string provenance = {});

Json bundle_to_json(const Bundle& b);
std::string emit_bundle(const Bundle& b);

/// Structural equality of the stored data, modules and group metadata.
bool same_bundle(const Bundle& a, const Bundle& b);

/// Deterministic pretty-printer: arrays of scalars stay on one line.
std::string format_json(const Json& j);

/// Sparse [i, j, ..., "c"] lists and dense coefficient-string arrays.
Json tensor_to_json(const Tensor& t);
Json vector_to_json(const Vector& v);
Json matrix_to_json(const Matrix& m);

/// Input to `gen group-algebra`: a group table over Q(zeta_N) with its
/// irreducible representations, one dense matrix per group element.
struct GroupFile {
    std::string name;
    unsigned conductor = 1;
    GroupTable table;
    std::vector<std::pair<std::string, std::vector<Matrix>>> irreps;
};

GroupFile parse_group_file(std::string_view text);
GroupFile load_group_file(const std::filesystem::path& path);

/// {"conductor": N, "exponents": m x m x m nested integers}.
CocycleTable load_cocycle_file(const std::filesystem::path& path, const GroupTable& group);

} // namespace quasifs
