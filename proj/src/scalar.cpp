#include "biquad/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace biquad {

using boost::multiprecision::cpp_int;

// ---- polynomial helpers ----

Polynomial poly_const(const Rational& c) {
    Polynomial p;
    if (c != 0) p[Monomial{}] = c;
    return p;
}

Polynomial poly_var(const std::string& name) {
    Polynomial p;
    p[Monomial{{name, 1}}] = 1;
    return p;
}

bool poly_is_zero(const Polynomial& a) { return a.empty(); }

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b) {
        auto it = r.find(m);
        if (it == r.end()) {
            r.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

Polynomial poly_neg(const Polynomial& a) {
    Polynomial r = a;
    for (auto& [m, c] : r) c = -c;
    return r;
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    return poly_add(a, poly_neg(b));
}

static Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b) r[v] += e;
    return r;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial m = mono_mul(ma, mb);
            auto it = r.find(m);
            if (it == r.end()) {
                r.emplace(std::move(m), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return r;
}

static Polynomial poly_pow(Polynomial base, unsigned e) {
    Polynomial r = poly_const(1);
    while (e) {
        if (e & 1u) r = poly_mul(r, base);
        e >>= 1u;
        if (e) base = poly_mul(base, base);
    }
    return r;
}

// Content of a polynomial: positive rational c with p/c integer, primitive.
static Rational poly_content(const Polynomial& p) {
    cpp_int g = 0, l = 1;
    for (const auto& [m, c] : p) {
        g = gcd(g, abs(numerator(c)));
        l = lcm(l, denominator(c));
    }
    if (g == 0) g = 1;
    return Rational(g, l);
}

// ---- Scalar ----

Scalar::Scalar(const Rational& v) : num_(poly_const(v)), den_(poly_const(1)) {}

Scalar::Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.empty()) throw DivisionByZero();
    canonicalize();
}

Scalar Scalar::parameter(const std::string& name) {
    return Scalar(poly_var(name), poly_const(1));
}

void Scalar::canonicalize() {
    if (num_.empty()) {
        den_ = poly_const(1);
        return;
    }
    // Strip the monomial factor common to every term of both polynomials.
    Monomial common;
    bool first = true;
    auto meet = [&](const Polynomial& p) {
        for (const auto& [m, c] : p) {
            if (first) {
                common = m;
                first = false;
                continue;
            }
            for (auto it = common.begin(); it != common.end();) {
                auto jt = m.find(it->first);
                if (jt == m.end()) {
                    it = common.erase(it);
                } else {
                    it->second = std::min(it->second, jt->second);
                    ++it;
                }
            }
        }
    };
    meet(num_);
    meet(den_);
    if (!common.empty()) {
        auto strip = [&](Polynomial& p) {
            Polynomial out;
            for (const auto& [m, c] : p) {
                Monomial r = m;
                for (const auto& [v, e] : common) {
                    auto it = r.find(v);
                    it->second -= e;
                    if (it->second == 0) r.erase(it);
                }
                out.emplace(std::move(r), c);
            }
            p = std::move(out);
        };
        strip(num_);
        strip(den_);
    }
    // Make the denominator primitive with positive leading coefficient.
    Rational c = poly_content(den_);
    if (den_.rbegin()->second < 0) c = -c;
    if (c != 1) {
        for (auto& [m, v] : den_) v /= c;
        for (auto& [m, v] : num_) v /= c;
    }
}

bool Scalar::equals(const Scalar& o) const {
    return poly_is_zero(poly_sub(poly_mul(num_, o.den_), poly_mul(o.num_, den_)));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(poly_add(poly_mul(a.num_, b.den_), poly_mul(b.num_, a.den_)),
                  poly_mul(a.den_, b.den_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(poly_sub(poly_mul(a.num_, b.den_), poly_mul(b.num_, a.den_)),
                  poly_mul(a.den_, b.den_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(poly_mul(a.num_, b.num_), poly_mul(a.den_, b.den_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Scalar(poly_mul(a.num_, b.den_), poly_mul(a.den_, b.num_));
}

Scalar operator-(const Scalar& a) {
    Scalar r = a;
    r.num_ = poly_neg(r.num_);
    return r;
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar(1);
    if (e < 0) {
        if (is_zero()) throw DivisionByZero();
        return Scalar(poly_pow(den_, static_cast<unsigned>(-e)),
                      poly_pow(num_, static_cast<unsigned>(-e)));
    }
    return Scalar(poly_pow(num_, static_cast<unsigned>(e)),
                  poly_pow(den_, static_cast<unsigned>(e)));
}

static Rational eval_poly(const Polynomial& p, const std::map<std::string, Rational>& env) {
    Rational acc = 0;
    for (const auto& [m, c] : p) {
        Rational t = c;
        for (const auto& [v, e] : m) {
            auto it = env.find(v);
            if (it == env.end()) throw MissingParameter(v);
            Rational pw = 1;
            for (unsigned k = 0; k < e; ++k) pw *= it->second;
            t *= pw;
        }
        acc += t;
    }
    return acc;
}

Rational Scalar::eval_at(const std::map<std::string, Rational>& assignment) const {
    Rational d = eval_poly(den_, assignment);
    if (d == 0) throw PoleAtPoint();
    Rational n = eval_poly(num_, assignment);
    return n / d;
}

std::set<std::string> Scalar::parameters() const {
    std::set<std::string> vars;
    for (const auto& [m, c] : num_)
        for (const auto& [v, e] : m) vars.insert(v);
    for (const auto& [m, c] : den_)
        for (const auto& [v, e] : m) vars.insert(v);
    return vars;
}

Scalar Scalar::unit_reduced() const {
    if (is_zero()) return *this;
    if (den_.size() == 1) {
        // Denominator is c * monomial, a unit of the field: drop the monomial.
        Scalar r;
        r.num_ = num_;
        r.den_ = poly_const(den_.begin()->second);
        r.canonicalize();
        return r;
    }
    return *this;
}

// ---- rendering ----

namespace {

unsigned mono_degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

// Display order: total degree descending, then the map order.
std::vector<std::pair<Monomial, Rational>> display_terms(const Polynomial& p) {
    std::vector<std::pair<Monomial, Rational>> terms(p.begin(), p.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        unsigned da = mono_degree(a.first), db = mono_degree(b.first);
        if (da != db) return da > db;
        return a.first < b.first;
    });
    return terms;
}

std::string mono_str(const Monomial& m) {
    std::ostringstream os;
    bool sep = false;
    for (const auto& [v, e] : m) {
        if (sep) os << "*";
        os << v;
        if (e > 1) os << "^" << e;
        sep = true;
    }
    return os.str();
}

// Render a polynomial whose coefficients are known to be integers.
std::string poly_str_int(const Polynomial& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : display_terms(p)) {
        cpp_int n = numerator(c);
        bool neg = n < 0;
        cpp_int mag = abs(n);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (m.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << mono_str(m);
        }
        first = false;
    }
    return os.str();
}

// A denominator prints without parentheses only when it is a single factor
// of the grammar: an integer literal or a plain var power.
bool den_is_single_factor(const Polynomial& p) {
    if (p.size() != 1) return false;
    const auto& [m, c] = *p.begin();
    if (c < 0) return false;
    if (m.empty()) return denominator(c) == 1;
    return m.size() == 1 && c == 1;
}

}  // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    // Scale both polynomials by the same rational so all coefficients are
    // integers and globally coprime; the value is unchanged.
    cpp_int l = 1;
    for (const auto& [m, c] : num_) l = lcm(l, denominator(c));
    for (const auto& [m, c] : den_) l = lcm(l, denominator(c));
    cpp_int g = 0;
    for (const auto& [m, c] : num_) g = gcd(g, abs(numerator(Rational(c * l))));
    for (const auto& [m, c] : den_) g = gcd(g, abs(numerator(Rational(c * l))));
    if (g == 0) g = 1;
    Rational scale = Rational(l, g);
    Polynomial n = num_, d = den_;
    for (auto& [m, c] : n) c *= scale;
    for (auto& [m, c] : d) c *= scale;

    if (d.size() == 1 && d.begin()->first.empty() && d.begin()->second == 1)
        return poly_str_int(n);

    std::string ns = poly_str_int(n);
    if (n.size() > 1) ns = "(" + ns + ")";
    std::string ds = poly_str_int(d);
    if (!den_is_single_factor(d)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

// ---- expression parser ----

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ExprError(pos_, msg); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) {
                Scalar w = factor();
                if (w.is_zero()) fail("division by zero");
                v = v / w;
            } else return v;
        }
    }

    Scalar factor() {
        if (eat('-')) return -factor();
        Scalar v = atom();
        if (eat('^')) {
            long e = integer();
            if (e < 0 && v.is_zero()) fail("zero raised to a negative power");
            v = v.pow(e);
        }
        return v;
    }

    Scalar atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rational(number()));
        if (std::isalpha(static_cast<unsigned char>(c))) return Scalar::parameter(identifier());
        fail("expected a number, parameter, or '('");
    }

    long integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer exponent");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    cpp_int number() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        return cpp_int(digits);
    }

    std::string identifier() {
        std::string name;
        name += s_[pos_++];
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            name += s_[pos_++];
        return name;
    }
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
    return ExprParser(text).parse();
}

}  // namespace biquad
