#include "charquiv/exact.hpp"

#include <cassert>
#include <sstream>
#include <vector>

namespace cq {

bool LaurentPoly2::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

Rat LaurentPoly2::constant_term() const { return coeff(0, 0); }

void LaurentPoly2::set_coeff(int a, int b, const Rat& c) {
    if (c == 0)
        terms_.erase({a, b});
    else
        terms_[{a, b}] = c;
}

Rat LaurentPoly2::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rat(0) : it->second;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r;
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    for (auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            LaurentPoly2::Exponents e{ea.first + eb.first, ea.second + eb.second};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                Rat c = ca * cb;
                if (c != 0) r.terms_[e] = c;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

int LaurentPoly2::min_exp_x() const {
    assert(!terms_.empty());
    int m = terms_.begin()->first.first;
    for (auto& [e, c] : terms_)
        if (e.first < m) m = e.first;
    return m;
}
int LaurentPoly2::max_exp_x() const {
    assert(!terms_.empty());
    int m = terms_.begin()->first.first;
    for (auto& [e, c] : terms_)
        if (e.first > m) m = e.first;
    return m;
}
int LaurentPoly2::min_exp_y() const {
    assert(!terms_.empty());
    int m = terms_.begin()->first.second;
    for (auto& [e, c] : terms_)
        if (e.second < m) m = e.second;
    return m;
}
int LaurentPoly2::max_exp_y() const {
    assert(!terms_.empty());
    int m = terms_.begin()->first.second;
    for (auto& [e, c] : terms_)
        if (e.second > m) m = e.second;
    return m;
}

LaurentPoly2 LaurentPoly2::shifted(int a, int b) const {
    LaurentPoly2 r;
    for (auto& [e, c] : terms_) r.terms_[{e.first + a, e.second + b}] = c;
    return r;
}

LaurentPoly2 LaurentPoly2::exponents_scaled(int d) const {
    assert(d != 0);
    LaurentPoly2 r;
    for (auto& [e, c] : terms_) r.terms_[{e.first * d, e.second * d}] = c;
    return r;
}

static Rat rat_pow(const Rat& v, int e);

LaurentPoly2 LaurentPoly2::exponents_scaled_xy(int dx, int dy) const {
    assert(dx != 0 && dy != 0);
    LaurentPoly2 r;
    for (auto& [e, c] : terms_) r.terms_[{e.first * dx, e.second * dy}] = c;
    return r;
}

LaurentPoly2 LaurentPoly2::eval_x(const Rat& v) const {
    LaurentPoly2 r;
    for (auto& [e, c] : terms_) {
        Rat f;
        if (v == 0) {
            if (e.first < 0) throw ZeroDenominator();
            if (e.first > 0) continue;
            f = c;
        } else {
            f = c * rat_pow(v, e.first);
        }
        r.set_coeff(0, e.second, r.coeff(0, e.second) + f);
    }
    return r;
}

LaurentPoly2 LaurentPoly2::eval_y(const Rat& v) const { return swapped().eval_x(v).swapped(); }

LaurentPoly2 LaurentPoly2::swapped() const {
    LaurentPoly2 r;
    for (auto& [e, c] : terms_) r.terms_[{e.second, e.first}] = c;
    return r;
}

LaurentPoly2 LaurentPoly2::negated_vars() const {
    LaurentPoly2 r;
    for (auto& [e, c] : terms_)
        r.terms_[e] = ((e.first + e.second) % 2 == 0) ? c : -c;
    return r;
}

static Rat rat_pow(const Rat& v, int e) {
    if (e == 0) return Rat(1);
    Rat base = v;
    if (e < 0) {
        if (v == 0) throw ZeroDenominator();
        base = 1 / v;
        e = -e;
    }
    Rat r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rat LaurentPoly2::eval(const Rat& xv, const Rat& yv) const {
    Rat s(0);
    for (auto& [e, c] : terms_) s += c * rat_pow(xv, e.first) * rat_pow(yv, e.second);
    return s;
}

// ---------------------------------------------------------------------------
// Dense integer polynomial kernels used by gcd and exact division.

namespace {

using UPoly = std::vector<Int>;   // univariate over Z, coeff of w^i at [i]
using BPoly = std::vector<UPoly>; // coeff of x^i is a UPoly in y

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
int udeg(const UPoly& p) { return (int)p.size() - 1; }

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

UPoly uscale(const UPoly& a, const Int& c) {
    if (c == 0) return {};
    UPoly r(a);
    for (auto& v : r) v *= c;
    return r;
}

void usub(UPoly& a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    utrim(a);
}

Int ucontent(const UPoly& p) {
    Int g(0);
    for (auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UPoly udiv_int(const UPoly& p, const Int& c) {
    assert(c != 0);
    UPoly r(p);
    for (auto& v : r) {
        assert(v % c == 0);
        v /= c;
    }
    return r;
}

// Pseudo-remainder of a by b (b nonzero).
UPoly uprem(UPoly a, const UPoly& b) {
    assert(!b.empty());
    const Int& lb = b.back();
    while (udeg(a) >= udeg(b)) {
        int sh = udeg(a) - udeg(b);
        Int la = a.back();
        for (auto& v : a) v *= lb;
        UPoly t = uscale(b, la);
        t.insert(t.begin(), sh, Int(0));
        usub(a, t);
        if ((int)a.size() - 1 >= udeg(b) + sh + 1) utrim(a);
    }
    return a;
}

UPoly uprimitive(UPoly p) {
    if (p.empty()) return p;
    Int c = ucontent(p);
    if (p.back() < 0) c = -c;
    return udiv_int(p, c);
}

UPoly ugcd(UPoly a, UPoly b) {
    if (a.empty()) return uprimitive(b);
    if (b.empty()) return uprimitive(a);
    Int ca = ucontent(a), cb = ucontent(b), g;
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = udiv_int(a, ca);
    b = udiv_int(b, cb);
    while (!b.empty()) {
        UPoly r = uprem(a, b);
        a = std::move(b);
        b = uprimitive(std::move(r));
    }
    a = uprimitive(std::move(a));
    return uscale(a, g);
}

// Exact division over Z; asserts divisibility (callers guarantee it).
UPoly udiv_exact(UPoly a, const UPoly& b) {
    assert(!b.empty());
    UPoly q;
    if (a.empty()) return q;
    assert(udeg(a) >= udeg(b));
    q.assign(udeg(a) - udeg(b) + 1, Int(0));
    while (!a.empty()) {
        assert(udeg(a) >= udeg(b));
        Int c = a.back() / b.back();
        assert(c * b.back() == a.back());
        int sh = udeg(a) - udeg(b);
        q[sh] = c;
        UPoly t = uscale(b, c);
        t.insert(t.begin(), sh, Int(0));
        usub(a, t);
    }
    return q;
}

void btrim(BPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}
int bdeg(const BPoly& p) { return (int)p.size() - 1; }

BPoly bmul_u(const BPoly& a, const UPoly& u) {
    BPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = umul(a[i], u);
    btrim(r);
    return r;
}

void bsub(BPoly& a, const BPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) usub(a[i], b[i]);
    btrim(a);
}

UPoly bcontent(const BPoly& p) {
    UPoly g;
    for (auto& c : p) g = ugcd(g, c);
    return g;
}

BPoly bdiv_u(const BPoly& p, const UPoly& u) {
    BPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i].empty() ? UPoly{} : udiv_exact(p[i], u);
    return r;
}

BPoly bprimitive(BPoly p) {
    if (p.empty()) return p;
    UPoly c = bcontent(p);
    return bdiv_u(p, c);
}

// Pseudo-remainder in the first variable.
BPoly bprem(BPoly a, const BPoly& b) {
    assert(!b.empty());
    const UPoly& lb = b.back();
    while (bdeg(a) >= bdeg(b)) {
        int sh = bdeg(a) - bdeg(b);
        UPoly la = a.back();
        for (auto& v : a) v = umul(v, lb);
        BPoly t = bmul_u(b, la);
        t.insert(t.begin(), sh, UPoly{});
        bsub(a, t);
        if (bdeg(a) >= bdeg(b) + sh) btrim(a);
    }
    return a;
}

BPoly bgcd(BPoly a, BPoly b) {
    if (a.empty()) return bprimitive(b);
    if (b.empty()) return bprimitive(a);
    UPoly ca = bcontent(a), cb = bcontent(b);
    a = bdiv_u(a, ca);
    b = bdiv_u(b, cb);
    UPoly g = ugcd(ca, cb);
    if (bdeg(a) < bdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        BPoly r = bprem(a, b);
        a = std::move(b);
        b = bprimitive(std::move(r));
    }
    a = bprimitive(std::move(a));
    return bmul_u(a, g);
}

// Conversion: genuine polynomial (no negative exponents) to dense, clearing
// denominators; returns the dense form, the cleared-denominator factor is
// irrelevant for gcd purposes.
BPoly to_dense_cleared(const LaurentPoly2& p) {
    Int lcm(1);
    for (auto& [e, c] : p.terms()) {
        assert(e.first >= 0 && e.second >= 0);
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    BPoly r;
    for (auto& [e, c] : p.terms()) {
        if ((int)r.size() <= e.first) r.resize(e.first + 1);
        UPoly& u = r[e.first];
        if ((int)u.size() <= e.second) u.resize(e.second + 1, Int(0));
        Rat cc = c * Rat(lcm);
        assert(cc.get_den() == 1);
        u[e.second] = cc.get_num();
    }
    for (auto& u : r) utrim(u);
    btrim(r);
    return r;
}

LaurentPoly2 from_dense(const BPoly& p) {
    LaurentPoly2 r;
    for (int i = 0; i <= bdeg(p); ++i)
        for (int j = 0; j <= udeg(p[i]); ++j)
            if (p[i][j] != 0) r.set_coeff(i, j, Rat(p[i][j]));
    return r;
}

}  // namespace

LaurentPoly2 LaurentPoly2::gcd(const LaurentPoly2& a, const LaurentPoly2& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly2();
    BPoly g = bgcd(to_dense_cleared(a), to_dense_cleared(b));
    // Positive lex-leading coefficient.
    LaurentPoly2 r = from_dense(g);
    if (!r.terms_.empty() && r.terms_.rbegin()->second < 0) r = -r;
    return r;
}

namespace {

using QPoly = std::vector<Rat>;   // univariate over Q
using BQPoly = std::vector<QPoly>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
void bqtrim(BQPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

// Exact univariate division over Q; false when not divisible.
bool qdiv_exact(const QPoly& a, const QPoly& b, QPoly& q) {
    q.clear();
    if (a.empty()) return true;
    if (b.empty() || a.size() < b.size()) return false;
    QPoly r = a;
    q.assign(a.size() - b.size() + 1, Rat(0));
    while (!r.empty() && r.size() >= b.size()) {
        size_t sh = r.size() - b.size();
        Rat c = r.back() / b.back();
        q[sh] = c;
        for (size_t j = 0; j < b.size(); ++j) r[sh + j] -= c * b[j];
        qtrim(r);
    }
    return r.empty();
}

BQPoly to_dense_q(const LaurentPoly2& p) {
    BQPoly r;
    for (auto& [e, c] : p.terms()) {
        assert(e.first >= 0 && e.second >= 0);
        if ((int)r.size() <= e.first) r.resize(e.first + 1);
        QPoly& u = r[e.first];
        if ((int)u.size() <= e.second) u.resize(e.second + 1, Rat(0));
        u[e.second] = c;
    }
    for (auto& u : r) qtrim(u);
    bqtrim(r);
    return r;
}

}  // namespace

LaurentPoly2 LaurentPoly2::div_exact(const LaurentPoly2& a, const LaurentPoly2& b) {
    if (b.is_zero()) throw ZeroDenominator();
    if (a.is_zero()) return LaurentPoly2();
    BQPoly A = to_dense_q(a), B = to_dense_q(b);
    if (A.size() < B.size()) throw NotPolynomial();
    // Long division in the first variable.  When b | a every leading
    // coefficient division is exact in Q[y], so failure anywhere means "not
    // divisible".
    BQPoly R = A, Q(A.size() - B.size() + 1);
    while (!R.empty() && R.size() >= B.size()) {
        size_t sh = R.size() - B.size();
        QPoly c;
        if (!qdiv_exact(R.back(), B.back(), c)) throw NotPolynomial();
        Q[sh] = c;
        for (size_t i = 0; i < B.size(); ++i) {
            // R[sh+i] -= c * B[i]
            if (B[i].empty() || c.empty()) continue;
            QPoly& t = R[sh + i];
            if (t.size() < c.size() + B[i].size() - 1) t.resize(c.size() + B[i].size() - 1, Rat(0));
            for (size_t j = 0; j < c.size(); ++j)
                for (size_t k = 0; k < B[i].size(); ++k) t[j + k] -= c[j] * B[i][k];
            qtrim(t);
        }
        bqtrim(R);
    }
    if (!R.empty()) throw NotPolynomial();
    LaurentPoly2 q;
    for (size_t i = 0; i < Q.size(); ++i)
        for (size_t j = 0; j < Q[i].size(); ++j)
            if (Q[i][j] != 0) q.set_coeff((int)i, (int)j, Q[i][j]);
    return q;
}

std::string LaurentPoly2::str(const std::string& xname, const std::string& yname) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending lex
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat c = it->second;
        int a = it->first.first, b = it->first.second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool unit = (c == 1) && (a != 0 || b != 0);
        if (!unit) os << c.get_str();
        bool need_star = !unit;
        if (a != 0) {
            if (need_star) os << "*";
            os << xname;
            if (a != 1) os << "^" << a;
            need_star = true;
        }
        if (b != 0) {
            if (need_star) os << "*";
            os << yname;
            if (b != 1) os << "^" << b;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RatFun

RatFun::RatFun(LaurentPoly2 num, LaurentPoly2 den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RatFun::normalize_units() {
    int sx = den_.min_exp_x(), sy = den_.min_exp_y();
    if (sx != 0 || sy != 0) {
        den_ = den_.shifted(-sx, -sy);
        num_ = num_.shifted(-sx, -sy);
    }
    // Scalar normalization: primitive integer denominator, positive lead.
    Int g(0), l(1);
    for (auto& [e, c] : den_.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat scale = Rat(l) / Rat(g);
    if (den_.terms().rbegin()->second < 0) scale = -scale;
    if (scale != 1) {
        LaurentPoly2 s(scale);
        den_ = den_ * s;
        num_ = num_ * s;
    }
}

void RatFun::normalize() {
    if (den_.is_zero()) throw ZeroDenominator();
    if (num_.is_zero()) {
        den_ = LaurentPoly2(Rat(1));
        return;
    }
    // Shift the denominator to a genuine polynomial with min exponents zero.
    int sx = den_.min_exp_x(), sy = den_.min_exp_y();
    if (sx != 0 || sy != 0) {
        den_ = den_.shifted(-sx, -sy);
        num_ = num_.shifted(-sx, -sy);
    }
    if (!den_.is_constant()) {
        int nx = num_.min_exp_x(), ny = num_.min_exp_y();
        LaurentPoly2 N = num_.shifted(-nx, -ny);
        LaurentPoly2 g = LaurentPoly2::gcd(N, den_);
        if (!g.is_constant()) {
            N = LaurentPoly2::div_exact(N, g);
            den_ = LaurentPoly2::div_exact(den_, g);
        }
        num_ = N.shifted(nx, ny);
    }
    normalize_units();
}

bool RatFun::is_one() const { return num_ == LaurentPoly2(Rat(1)) && den_ == LaurentPoly2(Rat(1)); }

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    if (!a.den_.is_constant() && !b.den_.is_constant()) {
        LaurentPoly2 g = LaurentPoly2::gcd(a.den_, b.den_);
        if (g.is_constant()) {
            // Coprime denominators: the sum is already reduced.
            RatFun r;
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            if (r.num_.is_zero()) return RatFun();
            r.den_ = a.den_ * b.den_;
            r.normalize_units();
            return r;
        }
        LaurentPoly2 db = LaurentPoly2::div_exact(b.den_, g);
        return RatFun(a.num_ * db + b.num_ * LaurentPoly2::div_exact(a.den_, g),
                      a.den_ * db);
    }
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    // Cross-reduce so the final normalization needs no large gcd.
    RatFun r1(a.num_, b.den_), r2(b.num_, a.den_);
    // The product of the two reduced fractions is fully reduced up to scalar
    // and monomial factors.
    RatFun r;
    r.num_ = r1.num_ * r2.num_;
    r.den_ = r1.den_ * r2.den_;
    r.normalize_units();
    return r;
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::inverse() const {
    if (is_zero()) throw ZeroDenominator();
    return RatFun(den_, num_);
}

RatFun RatFun::pow(int e) const {
    if (e == 0) return RatFun(Rat(1));
    RatFun base = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    RatFun r(Rat(1));
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool RatFun::is_polynomial() const { return den_.is_constant(); }

LaurentPoly2 RatFun::as_polynomial() const {
    if (!den_.is_constant()) throw NotPolynomial();
    Rat c = den_.constant_term();
    if (c == 1) return num_;
    return num_ * LaurentPoly2(1 / c);
}

RatFun RatFun::exponents_scaled(int d) const {
    return RatFun(num_.exponents_scaled(d), den_.exponents_scaled(d));
}

RatFun RatFun::exponents_scaled_xy(int dx, int dy) const {
    return RatFun(num_.exponents_scaled_xy(dx, dy), den_.exponents_scaled_xy(dx, dy));
}

RatFun RatFun::swapped() const { return RatFun(num_.swapped(), den_.swapped()); }

RatFun RatFun::to_univariate(int ex, int ey) const {
    assert(ex != 0 && ey != 0);
    auto subst = [&](const LaurentPoly2& p) {
        LaurentPoly2 r;
        for (auto& [e, c] : p.terms()) {
            int u = e.first * ex + e.second * ey;
            r.set_coeff(u, 0, r.coeff(u, 0) + c);
        }
        return r;
    };
    return RatFun(subst(num_), subst(den_));
}

RatFun RatFun::negated_vars() const { return RatFun(num_.negated_vars(), den_.negated_vars()); }

Rat RatFun::eval(const Rat& xv, const Rat& yv) const {
    Rat d = den_.eval(xv, yv);
    if (d == 0) throw ZeroDenominator();
    return num_.eval(xv, yv) / d;
}

LaurentPoly2 RatFun::substitute_halfpowers(int ex, int ey) const {
    assert(ex == 1 || ex == -1);
    assert(ey == 1 || ey == -1);
    if (is_zero()) return LaurentPoly2();
    auto subst = [&](const LaurentPoly2& p) {
        LaurentPoly2 r;  // univariate in u, second exponent unused
        for (auto& [e, c] : p.terms()) {
            int u = e.first * ex + e.second * ey;
            r.set_coeff(u, 0, r.coeff(u, 0) + c);
        }
        return r;
    };
    LaurentPoly2 nu = subst(num_), du = subst(den_);
    if (du.is_zero()) throw ZeroDenominator();
    RatFun reduced(nu, du);
    if (!reduced.is_polynomial()) throw NotPolynomial();
    LaurentPoly2 lp = reduced.as_polynomial();
    LaurentPoly2 out;
    for (auto& [e, c] : lp.terms()) {
        if (e.first % 2 != 0) throw OddParity();
        out.set_coeff(e.first / 2, 0, c);
    }
    return out;
}

std::string RatFun::str(const std::string& xname, const std::string& yname) const {
    if (is_polynomial()) return as_polynomial().str(xname, yname);
    return "(" + num_.str(xname, yname) + ")/(" + den_.str(xname, yname) + ")";
}

}  // namespace cq
