#include "sgo/serialize.hpp"

#include <fstream>

#include "sgo/errors.hpp"

namespace sgo {

namespace {

// integers stay JSON numbers; anything past 64 bits travels as a decimal string
json integer_json(const std::string& s) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used == s.size()) return v;
    } catch (const std::out_of_range&) {
    }
    return s;
}

std::string integer_text(const json& j) {
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_string()) return j.get<std::string>();
    throw ParseError("expected an integer, got " + j.dump());
}

std::vector<int> int_list(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw ParseError(std::string("missing list '") + key + "'");
    std::vector<int> out;
    for (const auto& x : j.at(key)) {
        if (!x.is_number_integer()) throw ParseError(std::string("non-integer entry in '") + key + "'");
        out.push_back(x.get<int>());
    }
    return out;
}

}

json to_json(const SuperWeight& w) {
    return json{{"lambda", w.lambda}, {"theta", w.theta}, {"theta_prime", w.theta_prime}};
}

SuperWeight weight_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("weight must be an object");
    SuperWeight w;
    w.lambda = int_list(j, "lambda");
    w.theta = int_list(j, "theta");
    w.theta_prime = j.contains("theta_prime") ? int_list(j, "theta_prime") : std::vector<int>{};
    w.M = static_cast<int>(w.lambda.size());
    w.N = static_cast<int>(w.theta.size() + w.theta_prime.size());
    try {
        w.validate();
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    return w;
}

json to_json(const LoopMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.n(); ++j) {
            json terms = json::array();
            for (const auto& [e, c] : a.at(i, j).poly().terms())
                terms.push_back(json::array({e, integer_json(c.numerator_str()), integer_json(c.denominator_str())}));
            row.push_back(terms);
        }
        rows.push_back(row);
    }
    const int p = a.precision();
    return json{{"n", a.n()}, {"precision", p == kInfinitePrecision ? json("inf") : json(p)}, {"entries", rows}};
}

LoopMatrix matrix_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 1) throw ParseError("matrix dimension must be positive");
        int precision = kInfinitePrecision;
        if (j.contains("precision")) {
            const json& p = j.at("precision");
            if (p.is_string()) {
                if (p.get<std::string>() != "inf") throw ParseError("precision must be an integer or \"inf\"");
            } else {
                precision = p.get<int>();
            }
        }
        const json& rows = j.at("entries");
        if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw ParseError("entries must have n rows");
        LoopMatrix a(n);
        for (int r = 0; r < n; ++r) {
            const json& row = rows.at(static_cast<std::size_t>(r));
            if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("each row must have n entries");
            for (int c = 0; c < n; ++c) {
                std::vector<std::pair<int, Rational>> terms;
                for (const auto& t : row.at(static_cast<std::size_t>(c))) {
                    if (!t.is_array() || t.size() != 3) throw ParseError("scalar terms are [exponent, p, q] triples");
                    const std::string q = integer_text(t.at(2));
                    if (q == "0") throw ParseError("zero denominator");
                    terms.emplace_back(t.at(0).get<int>(), Rational::from_strings(integer_text(t.at(1)), q));
                }
                a.at(r, c) = TruncatedSeries(LaurentScalar::from_terms(terms), precision);
            }
        }
        return a;
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

json to_json(const ColoredDivisor& d) {
    json pts = json::object();
    for (const auto& [x, w] : d.points()) pts[x] = to_json(w);
    return json{{"M", d.M()}, {"N", d.N()}, {"points", pts}};
}

ColoredDivisor divisor_from_json(const json& j) {
    try {
        const json& pts = j.at("points");
        if (!pts.is_object()) throw ParseError("points must be an object");
        int M = j.contains("M") ? j.at("M").get<int>() : -1;
        int N = j.contains("N") ? j.at("N").get<int>() : -1;
        std::vector<std::pair<std::string, SuperWeight>> coeffs;
        for (const auto& [x, wj] : pts.items()) {
            SuperWeight w = weight_from_json(wj);
            if (M < 0) M = w.M, N = w.N;
            coeffs.emplace_back(x, w);
        }
        if (M < 0) throw ParseError("empty divisor needs explicit M and N");
        ColoredDivisor d(M, N);
        for (const auto& [x, w] : coeffs) d.set(x, w);
        return d;
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

json to_json(const RootVector& n) { return n.coeffs; }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}
