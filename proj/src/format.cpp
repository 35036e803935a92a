#include "biquad/format.hpp"

#include "biquad/smoothness.hpp"

#include <cctype>
#include <sstream>

namespace biquad {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s, int max_fields) {
    std::vector<std::string> out;
    std::size_t t = 0;
    while (t < s.size()) {
        while (t < s.size() && std::isspace(static_cast<unsigned char>(s[t]))) ++t;
        if (t >= s.size()) break;
        if (max_fields > 0 && static_cast<int>(out.size()) == max_fields - 1) {
            out.push_back(trim(s.substr(t)));
            break;
        }
        std::size_t b = t;
        while (t < s.size() && !std::isspace(static_cast<unsigned char>(s[t]))) ++t;
        out.push_back(s.substr(b, t - b));
    }
    return out;
}

int parse_index(const std::string& tok, int line, const std::string& what) {
    if (tok.empty()) throw ParseError(line, "missing " + what);
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(line, "bad " + what + " '" + tok + "'");
    long v = std::strtol(tok.c_str(), nullptr, 10);
    if (v < 1 || v > 64) throw ParseError(line, what + " out of range: '" + tok + "'");
    return static_cast<int>(v);
}

bool valid_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

AlgebraPresentation parse_presentation(const std::string& text) {
    AlgebraPresentation pres;
    bool seen_name = false, seen_generators = false, seen_parameters = false,
         seen_orientation = false, seen_relation = false;
    std::set<std::string> declared;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        auto head = split_ws(line, 2);
        const std::string& key = head[0];
        std::string rest = head.size() > 1 ? head[1] : "";

        auto parse_expr = [&](const std::string& src) -> Scalar {
            Scalar v;
            try {
                v = parse_scalar(src);
            } catch (const ExprError& e) {
                throw ParseError(lineno, std::string("bad expression: ") + e.what());
            }
            for (const auto& p : v.parameters())
                if (!declared.count(p))
                    throw ParseError(lineno, "undeclared parameter '" + p + "'");
            return v;
        };
        auto split_assign = [&](const std::string& src, int nidx) {
            auto eq = src.find('=');
            if (eq == std::string::npos) throw ParseError(lineno, "expected '='");
            auto idx = split_ws(src.substr(0, eq), 0);
            if (static_cast<int>(idx.size()) != nidx)
                throw ParseError(lineno, "expected " + std::to_string(nidx) + " indices");
            std::string expr = trim(src.substr(eq + 1));
            if (expr.empty()) throw ParseError(lineno, "missing expression after '='");
            return std::make_pair(idx, expr);
        };
        auto need_generators = [&]() {
            if (!seen_generators)
                throw ParseError(lineno, "'generators' must come before relation lines");
        };
        auto check_pair = [&](int i, int j) {
            if (!(1 <= i && i < j && j <= pres.n))
                throw ParseError(lineno, "indices must satisfy 1 <= I < J <= N");
        };

        if (key == "algebra") {
            if (seen_name) throw ParseError(lineno, "duplicate 'algebra' line");
            seen_name = true;
            std::string v = trim(rest);
            if (v.size() < 2 || v.front() != '"' || v.back() != '"')
                throw ParseError(lineno, "algebra name must be quoted");
            pres.name = v.substr(1, v.size() - 2);
        } else if (key == "generators") {
            if (seen_generators) throw ParseError(lineno, "duplicate 'generators' line");
            if (seen_relation) throw ParseError(lineno, "'generators' must come first");
            seen_generators = true;
            pres.n = parse_index(trim(rest), lineno, "generator count");
        } else if (key == "parameters") {
            if (seen_parameters) throw ParseError(lineno, "duplicate 'parameters' line");
            if (seen_relation)
                throw ParseError(lineno, "'parameters' must come before relation lines");
            seen_parameters = true;
            std::istringstream ps(rest);
            std::string item;
            while (std::getline(ps, item, ',')) {
                item = trim(item);
                if (!valid_identifier(item))
                    throw ParseError(lineno, "invalid parameter name '" + item + "'");
                if (!declared.insert(item).second)
                    throw ParseError(lineno, "duplicate parameter '" + item + "'");
                pres.params.push_back(item);
            }
            if (pres.params.empty()) throw ParseError(lineno, "empty parameter list");
        } else if (key == "orientation") {
            if (seen_orientation) throw ParseError(lineno, "duplicate 'orientation' line");
            seen_orientation = true;
            std::string v = trim(rest);
            if (v == "descending") pres.orientation = Orientation::descending;
            else if (v == "ascending") pres.orientation = Orientation::ascending;
            else throw ParseError(lineno, "orientation must be 'descending' or 'ascending'");
        } else if (key == "q") {
            need_generators();
            seen_relation = true;
            auto [idx, expr] = split_assign(rest, 2);
            int i = parse_index(idx[0], lineno, "index"), j = parse_index(idx[1], lineno, "index");
            check_pair(i, j);
            if (pres.q.count({i, j})) throw ParseError(lineno, "duplicate q entry");
            Scalar v = parse_expr(expr);
            if (v.is_zero()) throw ParseError(lineno, "q must be nonzero");
            pres.set_q(i, j, v);
        } else if (key == "a") {
            need_generators();
            seen_relation = true;
            auto [idx, expr] = split_assign(rest, 3);
            int i = parse_index(idx[0], lineno, "index"), j = parse_index(idx[1], lineno, "index"),
                k = parse_index(idx[2], lineno, "index");
            check_pair(i, j);
            if (k > pres.n) throw ParseError(lineno, "indices must satisfy 1 <= K <= N");
            if (pres.a.count({i, j, k})) throw ParseError(lineno, "duplicate a entry");
            pres.set_a(i, j, k, parse_expr(expr));
        } else if (key == "b") {
            need_generators();
            seen_relation = true;
            auto [idx, expr] = split_assign(rest, 2);
            int i = parse_index(idx[0], lineno, "index"), j = parse_index(idx[1], lineno, "index");
            check_pair(i, j);
            if (pres.b.count({i, j})) throw ParseError(lineno, "duplicate b entry");
            pres.set_b(i, j, parse_expr(expr));
        } else {
            throw ParseError(lineno, "unknown key '" + key + "'");
        }
    }
    if (!seen_generators) throw ParseError(lineno, "missing 'generators' line");

    auto violations = validate(pres);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return to_descending(pres);
}

std::string emit_presentation(const AlgebraPresentation& pres) {
    std::ostringstream os;
    if (!pres.name.empty()) os << "algebra \"" << pres.name << "\"\n";
    os << "generators " << pres.n << "\n";
    if (!pres.params.empty()) {
        os << "parameters ";
        for (std::size_t t = 0; t < pres.params.size(); ++t) {
            if (t) os << ", ";
            os << pres.params[t];
        }
        os << "\n";
    }
    os << "orientation " << to_string(pres.orientation) << "\n";
    for (int i = 1; i <= pres.n; ++i)
        for (int j = i + 1; j <= pres.n; ++j) {
            Scalar v = pres.q_at(i, j);
            if (!v.equals(Scalar(1))) os << "q " << i << " " << j << " = " << v.str() << "\n";
        }
    for (int i = 1; i <= pres.n; ++i)
        for (int j = i + 1; j <= pres.n; ++j)
            for (int k = 1; k <= pres.n; ++k) {
                Scalar v = pres.a_at(i, j, k);
                if (!v.is_zero())
                    os << "a " << i << " " << j << " " << k << " = " << v.str() << "\n";
            }
    for (int i = 1; i <= pres.n; ++i)
        for (int j = i + 1; j <= pres.n; ++j) {
            Scalar v = pres.b_at(i, j);
            if (!v.is_zero()) os << "b " << i << " " << j << " = " << v.str() << "\n";
        }
    return os.str();
}

Word parse_word(const std::string& text, int n) {
    Word w;
    for (const auto& tok : split_ws(text, 0)) {
        if (tok.size() < 2 || tok[0] != 'x')
            throw ParseError(0, "bad word token '" + tok + "' (expected xI or xI^K)");
        std::size_t t = 1;
        long idx = 0;
        while (t < tok.size() && std::isdigit(static_cast<unsigned char>(tok[t])))
            idx = idx * 10 + (tok[t++] - '0');
        if (t == 1) throw ParseError(0, "bad word token '" + tok + "'");
        long exp = 1;
        if (t < tok.size()) {
            if (tok[t] != '^' || t + 1 >= tok.size())
                throw ParseError(0, "bad word token '" + tok + "'");
            ++t;
            exp = 0;
            while (t < tok.size()) {
                if (!std::isdigit(static_cast<unsigned char>(tok[t])))
                    throw ParseError(0, "bad word token '" + tok + "'");
                exp = exp * 10 + (tok[t++] - '0');
                if (exp > 64) throw ParseError(0, "exponent too large in '" + tok + "'");
            }
        }
        if (idx < 1 || idx > n)
            throw ParseError(0, "generator index out of range in '" + tok + "'");
        for (long e = 0; e < exp; ++e) w.push_back(static_cast<int>(idx));
    }
    return w;
}

}  // namespace biquad
