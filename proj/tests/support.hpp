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
#include <random>
#include <string>
#include <vector>

#include "quasifs/bundle.hpp"
#include "quasifs/cyclotomic.hpp"
#include "quasifs/matrix.hpp"

namespace quasifs::test {

inline FieldPtr field(unsigned n) { return CycloField::get(n); }

inline FieldElement el(const FieldPtr& f, const std::string& s) { return f->parse(s); }

inline Matrix mat(const FieldPtr& f, const std::vector<std::vector<std::string>>& rows) {
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = f->parse(rows[i][j]);
    return m;
}

inline Vector vec(const FieldPtr& f, const std::vector<std::string>& xs) {
    Vector v;
    for (const auto& x : xs) v.push_back(f->parse(x));
    return v;
}

inline std::filesystem::path data_dir() { return QUASIFS_DATA_DIR; }
inline std::filesystem::path corpus(const std::string& name) { return data_dir() / "corpus" / (name + ".bundle.json"); }
inline Bundle load(const std::string& name) { return load_bundle(corpus(name)); }

inline const std::vector<std::string>& group_algebra_names() {
    static const std::vector<std::string> names{"z2", "z3", "z4", "z5", "z6", "z7", "z8", "s3", "q8", "d4"};
    return names;
}
inline const std::vector<std::string>& twisted_dual_names() {
    static const std::vector<std::string> names{"z2w0", "z2w1", "z4w0", "z4w1", "z4w2", "z4w3"};
    return names;
}
inline std::vector<std::string> corpus_names() {
    auto all = group_algebra_names();
    for (const auto& n : twisted_dual_names()) all.push_back(n);
    return all;
}

/// Small random elements: coefficients p/q with |p| <= 5, 1 <= q <= 3.
class Random {
public:
    explicit Random(unsigned seed) : gen_(seed) {}

    Rational rational() {
        std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
        return Rational(num(gen_), den(gen_));
    }
    FieldElement element(const FieldPtr& f) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < f->degree(); ++i) c.push_back(rational());
        return FieldElement(f, std::move(c));
    }
    FieldElement nonzero(const FieldPtr& f) {
        for (;;) {
            FieldElement x = element(f);
            if (!x.is_zero()) return x;
        }
    }
    Matrix matrix(const FieldPtr& f, std::size_t r, std::size_t c) {
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = element(f);
        return m;
    }
    Vector vector(const FieldPtr& f, std::size_t n) {
        Vector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(element(f));
        return v;
    }
    std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_); }

private:
    std::mt19937 gen_;
};

} // namespace quasifs::test
