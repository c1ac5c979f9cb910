#include "kpm/io.hpp"

#include <fstream>
#include <sstream>

#include "kpm/errors.hpp"

namespace kpm {

namespace {

Rat entry_from_json(const Json& e) {
    if (e.is_string()) return rat_parse(e.get<std::string>());
    if (e.is_number_integer()) return Rat(e.get<long>());
    throw MalformedInput("matrix entry must be a \"p/q\" string or integer");
}

ScalarMatrix nested_to_matrix(const Json& j, int rows, int cols, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw MalformedInput(std::string(what) + ": expected " + std::to_string(rows) +
                             " rows");
    ScalarMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw MalformedInput(std::string(what) + ": expected " + std::to_string(cols) +
                                 " columns");
        for (int c = 0; c < cols; ++c) m(i, c) = Scalar(entry_from_json(row[c]));
    }
    return m;
}

Json matrix_to_nested(const ScalarMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ADHMData adhm_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("d")) throw MalformedInput("ADHM file: missing d");
    int d = j.at("d").get<int>();
    if (d < 0) throw MalformedInput("ADHM file: d must be nonnegative");
    for (const char* key : {"alpha", "beta", "a", "b"})
        if (!j.contains(key)) throw MalformedInput(std::string("ADHM file: missing ") + key);
    return make_adhm(d, nested_to_matrix(j.at("alpha"), d, d, "alpha"),
                     nested_to_matrix(j.at("beta"), d, d, "beta"),
                     nested_to_matrix(j.at("a"), d, 2, "a"),
                     nested_to_matrix(j.at("b"), d, 2, "b"));
}

Json adhm_to_json(const ADHMData& x) {
    Json j;
    j["d"] = x.d;
    j["alpha"] = matrix_to_nested(x.alpha);
    j["beta"] = matrix_to_nested(x.beta);
    j["a"] = matrix_to_nested(x.a);
    j["b"] = matrix_to_nested(x.b);
    return j;
}

LoopMatrix loop_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("matrix"))
        throw MalformedInput("loop file: missing matrix");
    const Json& m = j.at("matrix");
    if (!m.is_array() || m.size() != 2) throw MalformedInput("loop file: need 2 rows");
    LaurentMatrix g(2, 2);
    for (int i = 0; i < 2; ++i) {
        if (!m[i].is_array() || m[i].size() != 2)
            throw MalformedInput("loop file: need 2 columns");
        for (int c = 0; c < 2; ++c) {
            const Json& cell = m[i][c];
            if (!cell.is_object()) throw MalformedInput("loop entry must map exponent to p/q");
            LaurentPoly p;
            for (const auto& [key, value] : cell.items()) {
                int exp = 0;
                try {
                    exp = std::stoi(key);
                } catch (...) {
                    throw MalformedInput("loop entry exponent must be an integer: " + key);
                }
                p += LaurentPoly::monomial(exp, Scalar(entry_from_json(value)));
            }
            g(i, c) = p;
        }
    }
    return LoopMatrix::from_matrix(std::move(g));
}

Json loop_to_json(const LoopMatrix& g) {
    Json m = Json::array();
    for (int i = 0; i < 2; ++i) {
        Json row = Json::array();
        for (int c = 0; c < 2; ++c) {
            Json cell = Json::object();
            for (const auto& [e, v] : g.mat()(i, c).terms())
                cell[std::to_string(e)] = v.str();
            row.push_back(std::move(cell));
        }
        m.push_back(std::move(row));
    }
    return Json{{"matrix", m}};
}

ScalarMatrix matrix_from_json(const Json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key))
        throw MalformedInput("matrix file: missing " + key);
    const Json& rows = j.at(key);
    if (!rows.is_array() || rows.empty())
        throw MalformedInput("matrix file: needs a nonempty array");
    int r = static_cast<int>(rows.size());
    int c = rows[0].is_array() ? static_cast<int>(rows[0].size()) : -1;
    if (c < 0) throw MalformedInput("matrix file: rows must be arrays");
    return nested_to_matrix(rows, r, c, key.c_str());
}

Json matrix_to_json(const ScalarMatrix& m) { return Json{{"g", matrix_to_nested(m)}}; }

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw MalformedInput(path + ": " + e.what());
    }
    return j;
}

void save_json(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw MalformedInput("cannot write " + path);
    out << j.dump(2) << "\n";
}

ADHMData load_adhm(const std::string& path) { return adhm_from_json(load_json(path)); }
void save_adhm(const ADHMData& x, const std::string& path) {
    save_json(adhm_to_json(x), path);
}
LoopMatrix load_loop(const std::string& path) { return loop_from_json(load_json(path)); }
void save_loop(const LoopMatrix& g, const std::string& path) {
    save_json(loop_to_json(g), path);
}
ScalarMatrix load_matrix(const std::string& path, const std::string& key) {
    return matrix_from_json(load_json(path), key);
}

namespace {

std::vector<Rat> parse_rat_list(const std::string& s, std::size_t n) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rat_parse(item));
    if (out.size() != n)
        throw MalformedInput("expected " + std::to_string(n) + " comma-separated rationals");
    return out;
}

}  // namespace

std::array<Rat, 2> parse_pair(const std::string& s) {
    auto v = parse_rat_list(s, 2);
    return {v[0], v[1]};
}

std::array<Rat, 3> parse_triple(const std::string& s) {
    auto v = parse_rat_list(s, 3);
    return {v[0], v[1], v[2]};
}

std::string proj_str(const std::vector<Rat>& coords) {
    Int den(1), num_gcd(0);
    for (const auto& q : coords) {
        Int d = q.get_den();
        den = den / gcd(den, d) * d;
    }
    std::vector<Int> ints;
    for (const auto& q : coords) {
        Rat scaled = q * Rat(den);
        ints.push_back(scaled.get_num());
        num_gcd = gcd(num_gcd, ints.back());
    }
    if (sgn(num_gcd) == 0) num_gcd = 1;
    int lead_sign = 0;
    for (const auto& v : ints)
        if (sgn(v) != 0) {
            lead_sign = sgn(v);
            break;
        }
    if (lead_sign < 0) num_gcd = -num_gcd;
    std::string out = "[";
    for (std::size_t i = 0; i < ints.size(); ++i) {
        if (i) out += ":";
        out += int_str(ints[i] / num_gcd);
    }
    return out + "]";
}

}  // namespace kpm
