#include "gkmod/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gkmod/rational.hpp"

namespace gkmod {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

std::string to_json(const Representation& m) {
    ordered_json j;
    j["n"] = m.orient.n;
    j["sinks_even"] = m.orient.sinks_even;
    ordered_json spaces = ordered_json::object();
    for (const auto& [v, d] : m.dims)
        if (d > 0) spaces[v.str()] = d;
    j["spaces"] = std::move(spaces);
    ordered_json arrows = ordered_json::array();
    for (const auto& [key, mat] : m.arrows) {
        if (mat.is_zero()) continue;
        ordered_json a;
        a["from"] = key.first.str();
        a["to"] = key.second.str();
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < mat.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(format_scalar(mat.at(r, c)));
            rows.push_back(std::move(row));
        }
        a["matrix"] = std::move(rows);
        arrows.push_back(std::move(a));
    }
    j["arrows"] = std::move(arrows);
    return j.dump(2) + "\n";
}

Representation from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("bad JSON: top level must be an object");
    for (const char* key : {"n", "sinks_even", "spaces", "arrows"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("bad JSON: missing key '") + key + "'");

    Representation m;
    if (!j["n"].is_number_integer())
        throw std::invalid_argument("bad JSON: 'n' must be an integer");
    m.orient.n = j["n"].get<int>();
    if (!j["sinks_even"].is_boolean())
        throw std::invalid_argument("bad JSON: 'sinks_even' must be a boolean");
    m.orient.sinks_even = j["sinks_even"].get<bool>();

    if (!j["spaces"].is_object())
        throw std::invalid_argument("bad JSON: 'spaces' must be an object");
    for (const auto& [key, val] : j["spaces"].items()) {
        if (!val.is_number_integer() || val.get<int>() <= 0)
            throw std::invalid_argument("bad JSON: dimension at '" + key +
                                        "' must be a positive integer");
        m.dims[VertexAddress::parse(key)] = val.get<int>();
    }

    if (!j["arrows"].is_array())
        throw std::invalid_argument("bad JSON: 'arrows' must be an array");
    for (const auto& a : j["arrows"]) {
        if (!a.is_object() || !a.contains("from") || !a.contains("to") || !a.contains("matrix"))
            throw std::invalid_argument("bad JSON: each arrow needs from, to and matrix");
        const VertexAddress from = VertexAddress::parse(a["from"].get<std::string>());
        const VertexAddress to = VertexAddress::parse(a["to"].get<std::string>());
        const auto& rows = a["matrix"];
        if (!rows.is_array() || rows.empty())
            throw std::invalid_argument("bad JSON: arrow matrix must be a nonempty array");
        const std::size_t ncols = rows[0].is_array() ? rows[0].size() : 0;
        Matrix mat(rows.size(), ncols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r].is_array() || rows[r].size() != ncols)
                throw std::invalid_argument("bad JSON: ragged arrow matrix");
            for (std::size_t c = 0; c < ncols; ++c) {
                if (!rows[r][c].is_string())
                    throw std::invalid_argument("bad JSON: matrix entries must be strings");
                mat.at(r, c) = parse_scalar(rows[r][c].get<std::string>());
            }
        }
        if (mat.is_zero()) continue;
        if (m.arrows.count({from, to}))
            throw std::invalid_argument("bad JSON: duplicate arrow " + from.str() + " -> " +
                                        to.str());
        m.arrows[{from, to}] = std::move(mat);
    }

    if (auto err = validate(m)) throw std::invalid_argument("bad module: " + *err);
    return m;
}

namespace {

ordered_json center_json(const Center& c) {
    ordered_json out = ordered_json::array();
    for (const auto& v : c.at) out.push_back(v.str());
    return out;
}

std::string center_cell(const Center& c) {
    std::string s;
    for (std::size_t k = 0; k < c.at.size(); ++k) {
        if (k) s += '|';
        const std::string a = c.at[k].str();
        s += a.empty() ? "()" : a;
    }
    return s;
}

}  // namespace

std::string report_json(const OrbitReport& report) {
    ordered_json j;
    ordered_json sig;
    sig["r0"] = report.sig.r0;
    sig["p"] = report.sig.p.str();
    sig["q"] = report.sig.q.str();
    sig["b"] = report.sig.b;
    ordered_json path = ordered_json::array();
    for (const auto& v : report.sig.center_path) path.push_back(v.str());
    sig["center_path"] = std::move(path);
    sig["index"] = report.sig.index;
    j["signature"] = std::move(sig);
    j["window"] = ordered_json::array({report.lo, report.hi});
    ordered_json steps = ordered_json::array();
    for (const OrbitStep& s : report.steps) {
        ordered_json e;
        e["i"] = s.i;
        e["class"] = to_string(s.cls);
        e["radius"] = s.radius;
        e["diameter"] = s.diameter;
        e["center"] = center_json(s.center);
        ordered_json dims = ordered_json::object();
        for (const auto& [v, d] : s.dims) dims[v.str()] = d;
        e["dims"] = std::move(dims);
        e["total_dim"] = s.total_dim;
        e["gamma"] = s.gamma_directed;
        e["gamma_undirected"] = s.gamma_undirected;
        e["beta"] = s.beta;
        e["complete"] = s.complete;
        steps.push_back(std::move(e));
    }
    j["steps"] = std::move(steps);
    return j.dump(2) + "\n";
}

std::string orbit_csv(const OrbitReport& report) {
    std::ostringstream out;
    out << "step,class,radius,center,b,index,total_dim,gamma,beta\n";
    for (const OrbitStep& s : report.steps) {
        out << s.i << ',' << to_string(s.cls) << ',' << s.radius << ',' << center_cell(s.center)
            << ',' << report.sig.b << ',' << s.i << ',' << s.total_dim << ','
            << s.gamma_directed << ',' << s.beta << '\n';
    }
    return out.str();
}

std::string orbit_table(const OrbitReport& report) {
    const std::vector<std::string> head = {"index", "class",     "radius", "center",
                                           "dim",   "gamma",     "beta",   "complete"};
    std::vector<std::vector<std::string>> rows;
    for (const OrbitStep& s : report.steps) {
        rows.push_back({std::to_string(s.i), to_string(s.cls), std::to_string(s.radius),
                        center_cell(s.center), std::to_string(s.total_dim),
                        std::to_string(s.gamma_directed), std::to_string(s.beta),
                        s.complete ? "yes" : "no"});
    }
    std::vector<std::size_t> width(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) {
        width[c] = head[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    auto emit = [&width](std::ostringstream& out, const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out << "  ";
            out << std::string(width[c] - cells[c].size(), ' ') << cells[c];
        }
        out << '\n';
    };
    std::size_t total = 2 * (width.size() - 1);
    for (std::size_t w : width) total += w;

    std::ostringstream out;
    emit(out, head);
    out << std::string(total, '-') << '\n';
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k > 0 && report.steps[k].cls != report.steps[k - 1].cls)
            out << std::string(total, '-') << '\n';
        emit(out, rows[k]);
    }
    return out.str();
}

std::string rb_grid(int b, int lo, int hi, int lmax, RbVariant variant) {
    if (lo > hi) throw std::invalid_argument("rb_grid: empty index range");
    if (lmax < 1) throw std::invalid_argument("rb_grid: need at least one coray position");

    std::ostringstream out;
    for (int parity = 0; parity < 2; ++parity) {
        // Members with even orbit index have odd i+l here, and vice versa.
        out << (parity == 0 ? "even component" : "odd component") << " (b = " << b << ")\n";
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head{"l\\i"};
        for (int i = lo; i <= hi; ++i) head.push_back(std::to_string(i));
        rows.push_back(head);
        for (int l = lmax; l >= 1; --l) {
            std::vector<std::string> row{std::to_string(l)};
            for (int i = lo; i <= hi; ++i) {
                const bool even_member = (i + l) % 2 != 0;
                if ((parity == 0) == even_member)
                    row.push_back(std::to_string(r_b(i, l, b, variant)));
                else
                    row.push_back(".");
            }
            rows.push_back(row);
        }
        std::vector<std::size_t> width(rows[0].size(), 0);
        for (const auto& r : rows)
            for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < r.size(); ++c) {
                if (c) out << ' ';
                out << std::string(width[c] - r[c].size(), ' ') << r[c];
            }
            out << '\n';
        }
        if (parity == 0) out << '\n';
    }
    return out.str();
}

}  // namespace gkmod
