#include "udg/field.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace udg {

const FieldElem& FieldElem::zero() {
    static const FieldElem z{};
    return z;
}

const FieldElem& FieldElem::one() {
    static const FieldElem o{1};
    return o;
}

FieldElem inverse(const FieldElem& x) {
    if (x.is_zero()) throw std::domain_error("FieldElem inverse of zero");
    // t = x * conj11(x) lies in Q(sqrt3); n = t * conj3(t) is rational and nonzero.
    const FieldElem t = x * x.conj_sqrt11();
    const FieldElem n = t * t.conj_sqrt3();
    const Rat inv_n = Rat(1) / n.a;
    FieldElem r = x.conj_sqrt11() * t.conj_sqrt3();
    r.a *= inv_n;
    r.b *= inv_n;
    r.c *= inv_n;
    r.d *= inv_n;
    return r;
}

namespace {

int sign_rat(const Rat& r) { return r.sign(); }

// Elements p + q*sqrt(3) of the quadratic subfield.
struct Q3 {
    Rat p, q;

    bool is_zero() const { return p == 0 && q == 0; }
    Q3 operator+(const Q3& o) const { return {p + o.p, q + o.q}; }
    Q3 operator-(const Q3& o) const { return {p - o.p, q - o.q}; }
    Q3 operator*(const Q3& o) const { return {p * o.p + 3 * q * o.q, p * o.q + q * o.p}; }
    Q3 half() const { return {p / 2, q / 2}; }
};

int sign_q3(const Q3& x) {
    const int sp = sign_rat(x.p);
    const int sq = sign_rat(x.q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 with 3q^2; sign agrees with the larger magnitude side.
    return sp * sign_rat(x.p * x.p - 3 * x.q * x.q);
}

Q3 div_q3(const Q3& x, const Q3& y) {
    const Rat norm = y.p * y.p - 3 * y.q * y.q;  // nonzero for y != 0
    Q3 num = x * Q3{y.p, -y.q};
    return {num.p / norm, num.q / norm};
}

std::optional<Rat> sqrt_rat(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rat(0);
    const Int num = numerator(r), den = denominator(r);
    Int sn = boost::multiprecision::sqrt(num);
    Int sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rat(sn, sd);
}

// Nonnegative square root of x in Q(sqrt3), if one exists there.
std::optional<Q3> sqrt_q3(const Q3& x) {
    if (sign_q3(x) < 0) return std::nullopt;
    if (x.is_zero()) return Q3{0, 0};
    if (x.q == 0) {
        if (auto s = sqrt_rat(x.p)) return Q3{*s, 0};
        if (auto s = sqrt_rat(x.p / 3)) return Q3{0, *s};
        return std::nullopt;
    }
    if (x.p == 0) return std::nullopt;  // (u+v sqrt3)^2 has zero sqrt3-part only if u or v is 0
    // (u + v sqrt3)^2 = u^2+3v^2 + 2uv sqrt3; u^2 and 3v^2 are the roots of
    // z^2 - p z + 3(q/2)^2, so p^2 - 3q^2 must be a rational square.
    auto s = sqrt_rat(x.p * x.p - 3 * x.q * x.q);
    if (!s) return std::nullopt;
    for (const Rat& cand : {Rat((x.p + *s) / 2), Rat((x.p - *s) / 2)}) {
        auto u = sqrt_rat(cand);
        if (!u || *u == 0) continue;
        Rat v = x.q / (2 * *u);
        if (*u * *u + 3 * v * v != x.p) continue;
        Q3 root{*u, v};
        if (sign_q3(root) < 0) root = Q3{-root.p, -root.q};
        return root;
    }
    return std::nullopt;
}

Q3 re_part(const FieldElem& x) { return {x.a, x.b}; }    // coefficient of 1 over Q(sqrt3)
Q3 s11_part(const FieldElem& x) { return {x.c, x.d}; }   // coefficient of sqrt11

FieldElem from_parts(const Q3& u, const Q3& v) { return {u.p, u.q, v.p, v.q}; }

}  // namespace

int sign(const FieldElem& x) {
    const Q3 P = re_part(x), Q = s11_part(x);
    const int sp = sign_q3(P);
    const int sq = sign_q3(Q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    return sp * sign_q3(P * P - Q3{11, 0} * (Q * Q));
}

std::optional<FieldElem> sqrt(const FieldElem& x) {
    if (sign(x) < 0) throw std::domain_error("FieldElem sqrt of negative value");
    const Q3 P = re_part(x), Q = s11_part(x);
    if (Q.is_zero()) {
        if (auto u = sqrt_q3(P)) return from_parts(*u, Q3{0, 0});
        if (auto v = sqrt_q3({P.p / 11, P.q / 11})) return from_parts(Q3{0, 0}, *v);
        return std::nullopt;
    }
    if (P.is_zero()) return std::nullopt;
    // (U + V sqrt11)^2 = U^2+11V^2 + 2UV sqrt11, so P^2 - 11 Q^2 = (U^2-11V^2)^2
    // must be a square in Q(sqrt3).
    const Q3 disc = P * P - Q3{11, 0} * (Q * Q);
    auto s = sqrt_q3(disc);
    if (!s) return std::nullopt;
    for (const Q3& cand : {(P + *s).half(), (P - *s).half()}) {
        if (sign_q3(cand) < 0) continue;
        auto u = sqrt_q3(cand);
        if (!u || u->is_zero()) continue;
        Q3 v = div_q3(Q, Q3{2, 0} * *u);
        FieldElem root = from_parts(*u, v);
        if (root * root != x) continue;
        if (sign(root) < 0) root = -root;
        return root;
    }
    return std::nullopt;
}

double to_double(const FieldElem& x) {
    static const double s3 = 1.7320508075688772935;
    static const double s11 = 3.3166247903553998491;
    return x.a.convert_to<double>() + x.b.convert_to<double>() * s3 +
           x.c.convert_to<double>() * s11 + x.d.convert_to<double>() * s3 * s11;
}

int lex_compare(const FieldElem& x, const FieldElem& y) {
    for (auto [l, r] : {std::pair<const Rat&, const Rat&>{x.a, y.a}, {x.b, y.b}, {x.c, y.c}, {x.d, y.d}}) {
        if (l < r) return -1;
        if (l > r) return 1;
    }
    return 0;
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

std::string to_string(const FieldElem& x) {
    return "(" + rat_to_string(x.a) + ", " + rat_to_string(x.b) + ", " + rat_to_string(x.c) +
           ", " + rat_to_string(x.d) + ")";
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << to_string(x); }

Rat parse_rat(std::string_view text) {
    size_t i = 0, n = text.size();
    auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&]() -> Int {
        skip();
        size_t start = i;
        if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
        size_t digits = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw std::invalid_argument("expected integer in rational: '" + std::string(text) + "'");
        return Int(std::string(text.substr(start, i - start)));
    };
    Int num = read_int();
    skip();
    Int den = 1;
    if (i < n && text[i] == '/') {
        ++i;
        den = read_int();
        if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    skip();
    if (i != n) throw std::invalid_argument("trailing junk in rational: '" + std::string(text) + "'");
    return Rat(num, den);
}

FieldElem parse_field_elem(std::string_view text) {
    size_t i = 0, n = text.size();
    auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto expect = [&](char c) {
        skip();
        if (i >= n || text[i] != c)
            throw std::invalid_argument(std::string("expected '") + c + "' in '" + std::string(text) + "'");
        ++i;
    };
    auto read_component = [&]() -> Rat {
        skip();
        size_t start = i;
        while (i < n && text[i] != ',' && text[i] != ')') ++i;
        return parse_rat(text.substr(start, i - start));
    };
    expect('(');
    Rat a = read_component();
    expect(',');
    Rat b = read_component();
    expect(',');
    Rat c = read_component();
    expect(',');
    Rat d = read_component();
    expect(')');
    skip();
    if (i != n) throw std::invalid_argument("trailing junk after quadruple: '" + std::string(text) + "'");
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

}  // namespace udg
