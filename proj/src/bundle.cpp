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

#include "quasifs/bundle.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "quasifs/errors.hpp"

namespace quasifs {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

const Json& member(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

std::size_t as_size(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::size_t as_index(const Json& j, std::size_t bound, const std::string& path) {
    std::size_t i = as_size(j, path);
    if (i >= bound) fail(path, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
    return i;
}

FieldElement as_coeff(const Json& j, const FieldPtr& field, const std::string& path) {
    if (j.is_number_integer()) return field->from_rational(Rational(j.get<long>()));
    if (!j.is_string()) fail(path, "expected a coefficient string");
    try {
        return field->parse(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

Vector parse_vector(const Json& j, const FieldPtr& field, std::size_t n, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    if (j.size() != n)
        throw DimensionError(path + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(as_coeff(j[i], field, path + "[" + std::to_string(i) + "]"));
    return v;
}

// Sparse entries [i_1, ..., i_k, "c"] into a dense tensor with the given legs.
Tensor parse_sparse(const Json& j, const FieldPtr& field, const std::vector<std::size_t>& legs,
                    const std::string& path) {
    if (!j.is_array()) fail(path, "expected a list of sparse entries");
    Tensor t(field, legs);
    std::set<std::size_t> seen;
    std::vector<std::size_t> idx(legs.size());
    for (std::size_t e = 0; e < j.size(); ++e) {
        std::string p = path + "[" + std::to_string(e) + "]";
        const Json& entry = j[e];
        if (!entry.is_array() || entry.size() != legs.size() + 1)
            fail(p, "expected " + std::to_string(legs.size()) + " indices and a coefficient");
        for (std::size_t k = 0; k < legs.size(); ++k) idx[k] = as_index(entry[k], legs[k], p);
        std::size_t flat = t.flat_index(idx);
        if (!seen.insert(flat).second) fail(p, "duplicate entry");
        t[flat] = as_coeff(entry[legs.size()], field, p);
    }
    return t;
}

Matrix parse_sparse_matrix(const Json& j, const FieldPtr& field, std::size_t rows, std::size_t cols,
                           const std::string& path) {
    return parse_sparse(j, field, {rows, cols}, path).to_matrix();
}

std::string position(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line, col = 1;
        else ++col;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void format_into(const Json& j, std::string& out, int indent) {
    const std::string pad(indent, ' '), inner(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t k = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++k) {
            out += inner + Json(it.key()).dump() + ": ";
            format_into(it.value(), out, indent + 2);
            out += k + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "}";
    } else if (j.is_array()) {
        bool flat = true;
        for (const auto& x : j) flat = flat && x.is_primitive();
        if (flat) {
            out += "[";
            for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            out += inner;
            format_into(j[k], out, indent + 2);
            out += k + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
    } else {
        out += j.dump();
    }
}

} // namespace

const HModule* Bundle::find_module(std::string_view name) const {
    for (const auto& m : modules)
        if (m.name() == name) return &m;
    return nullptr;
}

std::size_t max_dimension() {
    if (const char* s = std::getenv("QUASIFS_MAX_DIM")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return v;
    }
    return 64;
}

Bundle parse_bundle(std::string_view text) {
    Json doc;
    std::string owned(text);
    try {
        doc = Json::parse(owned);
    } catch (const Json::parse_error& e) {
        throw ParseError("malformed JSON at " + position(owned, e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) fail("<root>", "expected an object");

    std::size_t conductor = as_size(member(member(doc, "field", "<root>"), "conductor", "field"), "field.conductor");
    if (conductor == 0 || conductor > 10000) fail("field.conductor", "conductor out of range");
    FieldPtr field = CycloField::get(unsigned(conductor));

    const Json& alg = member(doc, "algebra", "<root>");
    std::size_t n = as_size(member(alg, "dimension", "algebra"), "algebra.dimension");
    if (n == 0) throw DimensionError("algebra.dimension: must be positive");
    if (n > max_dimension())
        throw DimensionError("algebra.dimension: " + std::to_string(n) + " exceeds the limit " +
                             std::to_string(max_dimension()) + " (QUASIFS_MAX_DIM)");
    QuasiHopfData d(field, n);
    if (auto it = alg.find("basis"); it != alg.end()) {
        if (!it->is_array() || it->size() != n) throw DimensionError("algebra.basis: expected " + std::to_string(n) + " names");
        for (std::size_t i = 0; i < n; ++i) {
            if (!(*it)[i].is_string()) fail("algebra.basis[" + std::to_string(i) + "]", "expected a string");
            d.basis_names[i] = (*it)[i].get<std::string>();
        }
    }
    const std::vector<std::size_t> cube{n, n, n};
    d.unit = parse_vector(member(alg, "unit", "algebra"), field, n, "algebra.unit");
    d.mult = parse_sparse(member(alg, "mult", "algebra"), field, cube, "algebra.mult");
    d.comult = parse_sparse(member(alg, "comult", "algebra"), field, cube, "algebra.comult");
    d.counit = parse_vector(member(alg, "counit", "algebra"), field, n, "algebra.counit");
    d.phi = parse_sparse(member(alg, "phi", "algebra"), field, cube, "algebra.phi");
    if (auto it = alg.find("phi_inv"); it != alg.end())
        d.phi_inv = parse_sparse(*it, field, cube, "algebra.phi_inv");
    // [i, j, c]: S(e_i) has coefficient c on e_j
    d.antipode = parse_sparse_matrix(member(alg, "antipode", "algebra"), field, n, n, "algebra.antipode").transpose();
    d.alpha = parse_vector(member(alg, "alpha", "algebra"), field, n, "algebra.alpha");
    d.beta = parse_vector(member(alg, "beta", "algebra"), field, n, "algebra.beta");

    Bundle b{d, nullptr, {}, std::nullopt, {}};
    b.algebra = std::make_shared<const QuasiHopfAlgebra>(std::move(d));

    if (auto it = doc.find("modules"); it != doc.end()) {
        if (!it->is_array()) fail("modules", "expected an array");
        std::set<std::string> names;
        for (std::size_t m = 0; m < it->size(); ++m) {
            std::string p = "modules[" + std::to_string(m) + "]";
            const Json& mj = (*it)[m];
            const Json& nj = member(mj, "name", p);
            if (!nj.is_string()) fail(p + ".name", "expected a string");
            std::string name = nj.get<std::string>();
            if (!names.insert(name).second) fail(p + ".name", "duplicate module name '" + name + "'");
            std::size_t dim = as_size(member(mj, "dimension", p), p + ".dimension");
            if (dim == 0 || dim > max_dimension()) throw DimensionError(p + ".dimension: out of range");
            const Json& act = member(mj, "action", p);
            if (!act.is_array()) fail(p + ".action", "expected an array");
            if (act.size() != n)
                throw DimensionError(p + ".action: expected " + std::to_string(n) + " matrices, got " +
                                     std::to_string(act.size()));
            std::vector<Matrix> mats;
            for (std::size_t i = 0; i < n; ++i)
                mats.push_back(parse_sparse_matrix(act[i], field, dim, dim, p + ".action[" + std::to_string(i) + "]"));
            b.modules.emplace_back(name, b.algebra, std::move(mats));
        }
    }

    if (auto it = doc.find("group"); it != doc.end()) {
        const Json& g = *it;
        const Json& kind = member(g, "kind", "group");
        if (!kind.is_string() || (kind != "group-algebra" && kind != "twisted-dual"))
            fail("group.kind", "expected \"group-algebra\" or \"twisted-dual\"");
        const Json& tj = member(g, "table", "group");
        if (!tj.is_array() || tj.size() != n)
            throw DimensionError("group.table: expected " + std::to_string(n) + " rows");
        std::vector<std::vector<std::size_t>> table(n);
        for (std::size_t r = 0; r < n; ++r) {
            std::string p = "group.table[" + std::to_string(r) + "]";
            if (!tj[r].is_array() || tj[r].size() != n) throw DimensionError(p + ": expected " + std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c) table[r].push_back(as_index(tj[r][c], n, p));
        }
        std::vector<std::string> names;
        if (auto e = g.find("elements"); e != g.end()) {
            if (!e->is_array() || e->size() != n) throw DimensionError("group.elements: expected " + std::to_string(n) + " names");
            for (const auto& x : *e) {
                if (!x.is_string()) fail("group.elements", "expected strings");
                names.push_back(x.get<std::string>());
            }
        }
        try {
            b.group = GroupInfo{kind.get<std::string>(), GroupTable(std::move(table), std::move(names))};
        } catch (const InvalidGroup& e) {
            fail("group.table", e.what());
        }
    }

    if (auto it = doc.find("provenance"); it != doc.end()) {
        if (!it->is_string()) fail("provenance", "expected a string");
        b.provenance = it->get<std::string>();
    }
    return b;
}

Bundle load_bundle(const std::filesystem::path& path) {
    try {
        return parse_bundle(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.filename().string() + ": " + e.what());
    } catch (const DimensionError& e) {
        throw DimensionError(path.filename().string() + ": " + e.what());
    }
}

Bundle make_bundle(const AlgebraPtr& algebra, std::vector<HModule> modules, std::optional<GroupInfo> group,
                   std::string provenance) {
    for (const auto& m : modules)
        if (m.parent() != algebra) throw ParentMismatch("module " + m.name() + " belongs to another algebra");
    return Bundle{algebra->data(), algebra, std::move(modules), std::move(group), std::move(provenance)};
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

Json tensor_to_json(const Tensor& t) {
    Json out = Json::array();
    for (std::size_t flat : t.nonzeros()) {
        Json entry = Json::array();
        for (std::size_t i : t.multi_index(flat)) entry.push_back(i);
        entry.push_back(t[flat].to_string());
        out.push_back(std::move(entry));
    }
    return out;
}

Json matrix_to_json(const Matrix& m) { return tensor_to_json(Tensor::from_matrix(m)); }

Json bundle_to_json(const Bundle& b) {
    const QuasiHopfData& d = b.data;
    Json doc;
    doc["field"] = {{"conductor", d.field->conductor()}};
    Json alg;
    alg["dimension"] = d.dim;
    alg["basis"] = d.basis_names;
    alg["unit"] = vector_to_json(d.unit);
    alg["mult"] = tensor_to_json(d.mult);
    alg["comult"] = tensor_to_json(d.comult);
    alg["counit"] = vector_to_json(d.counit);
    alg["phi"] = tensor_to_json(d.phi);
    if (d.phi_inv) alg["phi_inv"] = tensor_to_json(*d.phi_inv);
    alg["antipode"] = matrix_to_json(d.antipode.transpose());
    alg["alpha"] = vector_to_json(d.alpha);
    alg["beta"] = vector_to_json(d.beta);
    doc["algebra"] = std::move(alg);
    Json mods = Json::array();
    for (const auto& m : b.modules) {
        Json mj;
        mj["name"] = m.name();
        mj["dimension"] = m.dim();
        Json act = Json::array();
        for (const auto& a : m.action()) act.push_back(matrix_to_json(a));
        mj["action"] = std::move(act);
        mods.push_back(std::move(mj));
    }
    doc["modules"] = std::move(mods);
    if (b.group) {
        Json g;
        g["kind"] = b.group->kind;
        g["elements"] = b.group->table.names();
        g["table"] = b.group->table.table();
        doc["group"] = std::move(g);
    }
    if (!b.provenance.empty()) doc["provenance"] = b.provenance;
    return doc;
}

std::string emit_bundle(const Bundle& b) { return format_json(bundle_to_json(b)); }

std::string format_json(const Json& j) {
    std::string out;
    format_into(j, out, 0);
    out += "\n";
    return out;
}

bool same_bundle(const Bundle& a, const Bundle& b) {
    const QuasiHopfData &x = a.data, &y = b.data;
    if (x.field->conductor() != y.field->conductor() || x.dim != y.dim) return false;
    if (x.basis_names != y.basis_names || x.unit != y.unit || !(x.mult == y.mult) || !(x.comult == y.comult) ||
        x.counit != y.counit || !(x.phi == y.phi) || !(x.antipode == y.antipode) || x.alpha != y.alpha ||
        x.beta != y.beta)
        return false;
    if (x.phi_inv.has_value() != y.phi_inv.has_value() || (x.phi_inv && !(*x.phi_inv == *y.phi_inv))) return false;
    if (a.modules.size() != b.modules.size()) return false;
    for (std::size_t i = 0; i < a.modules.size(); ++i)
        if (a.modules[i].name() != b.modules[i].name() || a.modules[i].action() != b.modules[i].action()) return false;
    if (a.group.has_value() != b.group.has_value()) return false;
    if (a.group && (a.group->kind != b.group->kind || a.group->table.table() != b.group->table.table() ||
                    a.group->table.names() != b.group->table.names()))
        return false;
    return a.provenance == b.provenance;
}

namespace {

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("malformed JSON at " + position(text, e.byte) + ": " + e.what());
    }
}

GroupTable parse_table(const Json& doc, std::vector<std::string> names) {
    const Json& tj = member(doc, "table", "<root>");
    if (!tj.is_array() || tj.empty()) fail("table", "expected a non-empty array");
    const std::size_t m = tj.size();
    std::vector<std::vector<std::size_t>> table(m);
    for (std::size_t r = 0; r < m; ++r) {
        std::string p = "table[" + std::to_string(r) + "]";
        if (!tj[r].is_array() || tj[r].size() != m) throw DimensionError(p + ": expected " + std::to_string(m) + " entries");
        for (std::size_t c = 0; c < m; ++c) table[r].push_back(as_index(tj[r][c], m, p));
    }
    try {
        return GroupTable(std::move(table), std::move(names));
    } catch (const InvalidGroup& e) {
        fail("table", e.what());
    }
}

} // namespace

GroupFile parse_group_file(std::string_view text) {
    Json doc = parse_json(std::string(text));
    if (!doc.is_object()) fail("<root>", "expected an object");
    std::vector<std::string> names;
    if (auto e = doc.find("elements"); e != doc.end()) {
        if (!e->is_array()) fail("elements", "expected an array");
        for (const auto& x : *e) {
            if (!x.is_string()) fail("elements", "expected strings");
            names.push_back(x.get<std::string>());
        }
    }
    GroupTable table = parse_table(doc, std::move(names));
    GroupFile g{"", 1, std::move(table), {}};
    if (auto it = doc.find("name"); it != doc.end() && it->is_string()) g.name = it->get<std::string>();
    if (auto it = doc.find("conductor"); it != doc.end()) {
        std::size_t c = as_size(*it, "conductor");
        if (c == 0 || c > 10000) fail("conductor", "out of range");
        g.conductor = unsigned(c);
    }
    FieldPtr field = CycloField::get(g.conductor);
    const std::size_t m = g.table.order();
    if (auto it = doc.find("irreps"); it != doc.end()) {
        if (!it->is_array()) fail("irreps", "expected an array");
        for (std::size_t r = 0; r < it->size(); ++r) {
            std::string p = "irreps[" + std::to_string(r) + "]";
            const Json& ij = (*it)[r];
            const Json& nj = member(ij, "name", p);
            if (!nj.is_string()) fail(p + ".name", "expected a string");
            std::size_t d = as_size(member(ij, "dimension", p), p + ".dimension");
            if (d == 0) throw DimensionError(p + ".dimension: must be positive");
            const Json& mats = member(ij, "matrices", p);
            if (!mats.is_array() || mats.size() != m)
                throw DimensionError(p + ".matrices: expected one matrix per group element");
            std::vector<Matrix> action;
            for (std::size_t x = 0; x < m; ++x) {
                std::string q = p + ".matrices[" + std::to_string(x) + "]";
                if (!mats[x].is_array() || mats[x].size() != d) throw DimensionError(q + ": expected " + std::to_string(d) + " rows");
                Matrix a(field, d, d);
                for (std::size_t i = 0; i < d; ++i) {
                    Vector row = parse_vector(mats[x][i], field, d, q + "[" + std::to_string(i) + "]");
                    for (std::size_t j = 0; j < d; ++j) a(i, j) = row[j];
                }
                action.push_back(std::move(a));
            }
            g.irreps.emplace_back(nj.get<std::string>(), std::move(action));
        }
    }
    return g;
}

GroupFile load_group_file(const std::filesystem::path& path) {
    try {
        return parse_group_file(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.filename().string() + ": " + e.what());
    }
}

CocycleTable load_cocycle_file(const std::filesystem::path& path, const GroupTable& group) {
    try {
        Json doc = parse_json(read_file(path));
        std::size_t n = as_size(member(doc, "conductor", "<root>"), "conductor");
        if (n == 0 || n > 10000) fail("conductor", "out of range");
        const Json& ex = member(doc, "exponents", "<root>");
        const std::size_t m = group.order();
        std::vector<long> flat;
        if (!ex.is_array() || ex.size() != m) throw DimensionError("exponents: expected " + std::to_string(m) + " slices");
        for (std::size_t a = 0; a < m; ++a) {
            if (!ex[a].is_array() || ex[a].size() != m) throw DimensionError("exponents[" + std::to_string(a) + "]: wrong size");
            for (std::size_t b = 0; b < m; ++b) {
                const Json& row = ex[a][b];
                std::string p = "exponents[" + std::to_string(a) + "][" + std::to_string(b) + "]";
                if (!row.is_array() || row.size() != m) throw DimensionError(p + ": wrong size");
                for (const auto& v : row) {
                    if (!v.is_number_integer()) fail(p, "expected integers");
                    flat.push_back(v.get<long>());
                }
            }
        }
        return CocycleTable(group, unsigned(n), std::move(flat));
    } catch (const ParseError& e) {
        throw ParseError(path.filename().string() + ": " + e.what());
    }
}

} // namespace quasifs
