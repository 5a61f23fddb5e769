#include "charquiv/symfun.hpp"

#include <algorithm>
#include <cassert>

namespace cq {

namespace {

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> p(a.parts());
    p.insert(p.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(p));
}

using PExp = std::map<Partition, Rat>;

PExp pexp_mul(const PExp& a, const PExp& b) {
    PExp r;
    for (auto& [la, ca] : a)
        for (auto& [mu, cb] : b) r[union_parts(la, mu)] += ca * cb;
    for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
    return r;
}

// h_n resp. e_n in power sums.
PExp he_one_row(int n, bool sign) {
    PExp r;
    for (auto& rho : partitions_of(n)) {
        Rat c = Rat(1) / Rat(z_part(rho));
        if (sign && (n - rho.length()) % 2) c = -c;
        r[rho] = c;
    }
    return r;
}

PExp schur_pexp(const Partition& la) {
    PExp r;
    int n = la.size();
    for (auto& rho : partitions_of(n)) {
        long ch = sym_char(la, rho);
        if (ch != 0) r[rho] = Rat(ch) / Rat(z_part(rho));
    }
    return r;
}

// All monomial symmetric functions of degree n in power sums, via the
// inverse Kostka matrix (s_la = sum_mu K_{la,mu} m_mu, K unitriangular in
// dominance; the generation order of partitions_of is lex-descending, which
// refines dominance).
const std::map<Partition, PExp>& monomial_table(int n) {
    static std::map<int, std::map<Partition, PExp>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    auto ps = partitions_of(n);
    int m = (int)ps.size();
    std::vector<PExp> schur(m);
    for (int i = 0; i < m; ++i) schur[i] = schur_pexp(ps[i]);
    // K[i][j] = <s_{ps[i]}, h_{ps[j]}>
    std::vector<std::vector<Rat>> K(m, std::vector<Rat>(m, Rat(0)));
    for (int j = 0; j < m; ++j) {
        PExp h;
        h[Partition()] = 1;
        for (int p : ps[j].parts()) h = pexp_mul(h, he_one_row(p, false));
        for (int i = 0; i < m; ++i) {
            Rat v(0);
            for (auto& [rho, c] : schur[i]) {
                auto hit = h.find(rho);
                if (hit != h.end()) v += c * hit->second * Rat(z_part(rho));
            }
            K[i][j] = v;
        }
    }
    std::map<Partition, PExp> out;
    for (int j = 0; j < m; ++j) {
        // m_{ps[j]} = sum_i (K^{-1})_{ji} s_{ps[i]}; solve K^T y = e_j by
        // forward substitution (K is upper unitriangular).
        std::vector<Rat> y(m, Rat(0));
        for (int l = j; l < m; ++l) {
            Rat s = (l == j) ? Rat(1) : Rat(0);
            for (int i = j; i < l; ++i) s -= K[i][l] * y[i];
            y[l] = s;
        }
        PExp e;
        for (int i = j; i < m; ++i) {
            if (y[i] == 0) continue;
            for (auto& [rho, c] : schur[i]) {
                e[rho] += y[i] * c;
            }
        }
        for (auto itr = e.begin(); itr != e.end();)
            itr = (itr->second == 0) ? e.erase(itr) : std::next(itr);
        out[ps[j]] = std::move(e);
    }
    return memo[n] = std::move(out);
}

}  // namespace

const std::map<Partition, Rat>& p_expansion(Basis b, const Partition& la) {
    static std::map<std::pair<int, Partition>, PExp> memo;
    auto key = std::make_pair((int)b, la);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    PExp r;
    switch (b) {
        case Basis::p:
            r[la] = 1;
            break;
        case Basis::h:
        case Basis::e: {
            r[Partition()] = 1;
            for (int p : la.parts()) r = pexp_mul(r, he_one_row(p, b == Basis::e));
            break;
        }
        case Basis::s:
            r = schur_pexp(la);
            break;
        case Basis::m:
            r = monomial_table(la.size()).at(la);
            break;
    }
    return memo[key] = std::move(r);
}

SymFun SymFun::one(int alphabets, int cap) {
    SymFun f(alphabets, cap);
    f.coeffs_[PIndex(alphabets)] = RatFun(1);
    return f;
}

RatFun SymFun::coeff(const PIndex& idx) const {
    auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? RatFun() : it->second;
}

void SymFun::add_term(const PIndex& idx, const RatFun& c) {
    assert((int)idx.size() == k_);
    if (c.is_zero()) return;
    for (auto& la : idx)
        if (la.size() > cap_) throw DegreeCapExceeded();
    auto it = coeffs_.find(idx);
    if (it == coeffs_.end()) {
        coeffs_[idx] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymFun SymFun::operator-() const {
    SymFun r(*this);
    for (auto& [i, c] : r.coeffs_) c = -c;
    return r;
}

SymFun& SymFun::operator+=(const SymFun& o) {
    if (k_ != o.k_) throw AlphabetMismatch();
    truncated_ = truncated_ || o.truncated_;
    for (auto& [i, c] : o.coeffs_) add_term(i, c);
    return *this;
}

SymFun& SymFun::operator-=(const SymFun& o) {
    if (k_ != o.k_) throw AlphabetMismatch();
    truncated_ = truncated_ || o.truncated_;
    for (auto& [i, c] : o.coeffs_) add_term(i, -c);
    return *this;
}

SymFun operator*(const SymFun& a, const SymFun& b) {
    if (a.k_ != b.k_ || a.cap_ != b.cap_) throw AlphabetMismatch();
    SymFun r(a.k_, a.cap_);
    r.truncated_ = a.truncated_ || b.truncated_;
    for (auto& [ia, ca] : a.coeffs_)
        for (auto& [ib, cb] : b.coeffs_) {
            PIndex idx(a.k_);
            bool over = false;
            for (int i = 0; i < a.k_; ++i) {
                idx[i] = union_parts(ia[i], ib[i]);
                if (idx[i].size() > a.cap_) over = true;
            }
            if (over) {
                r.truncated_ = true;
                continue;
            }
            r.add_term(idx, ca * cb);
        }
    return r;
}

SymFun SymFun::scaled(const RatFun& c) const {
    SymFun r(k_, cap_);
    r.truncated_ = truncated_;
    if (c.is_zero()) return r;
    for (auto& [i, cc] : coeffs_) r.coeffs_[i] = cc * c;
    return r;
}

SymFun SymFun::adams(int d) const {
    assert(d >= 1);
    SymFun r(k_, cap_);
    r.truncated_ = truncated_;
    for (auto& [idx, c] : coeffs_) {
        PIndex sc(k_);
        bool over = false;
        for (int i = 0; i < k_; ++i) {
            sc[i] = idx[i].scaled(d);
            if (sc[i].size() > cap_) over = true;
        }
        if (over) {
            r.truncated_ = true;
            continue;
        }
        r.coeffs_[sc] = c.exponents_scaled(d);
    }
    return r;
}

SymFun SymFun::principal_specialize(int i) const {
    assert(i >= 0 && i < k_);
    SymFun r(k_, cap_);
    r.truncated_ = truncated_;
    for (auto& [idx, c] : coeffs_) {
        RatFun f = c;
        for (int p : idx[i].parts()) {
            LaurentPoly2 den = LaurentPoly2(1L) - LaurentPoly2::x(p);
            f = f * RatFun(LaurentPoly2(1L), den);
        }
        r.coeffs_[idx] = f;
    }
    return r;
}

SymFun SymFun::diagonal_part(int n) const {
    SymFun r(k_, cap_);
    r.truncated_ = truncated_;
    for (auto& [idx, c] : coeffs_) {
        bool diag = true;
        for (auto& la : idx)
            if (la.size() != n) diag = false;
        if (diag) r.coeffs_[idx] = c;
    }
    return r;
}

SymFun basis_element(Basis b, const PIndex& idx, int cap) {
    assert(!idx.empty());
    int k = (int)idx.size();
    for (auto& la : idx)
        if (la.size() > cap) throw DegreeCapExceeded();
    SymFun r = SymFun::one(k, cap);
    for (int i = 0; i < k; ++i) {
        SymFun fi(k, cap);
        for (auto& [rho, c] : p_expansion(b, idx[i])) {
            PIndex j(k);
            j[i] = rho;
            fi.add_term(j, RatFun(c));
        }
        r = r * fi;
    }
    return r;
}

SymFun basis_element1(Basis b, const Partition& la, int cap) {
    return basis_element(b, PIndex{la}, cap);
}

RatFun hall_pair(const SymFun& f, const SymFun& g) {
    if (f.alphabets() != g.alphabets() || f.cap() != g.cap()) throw AlphabetMismatch();
    const auto& small = f.coeffs().size() <= g.coeffs().size() ? f : g;
    const auto& big = f.coeffs().size() <= g.coeffs().size() ? g : f;
    RatFun s;
    for (auto& [idx, c] : small.coeffs()) {
        auto it = big.coeffs().find(idx);
        if (it == big.coeffs().end()) continue;
        Int z(1);
        for (auto& la : idx) z *= z_part(la);
        s += c * it->second * RatFun(Rat(z));
    }
    return s;
}

SymFun embed_alphabet(const SymFun& f, int k, int i) {
    assert(f.alphabets() == 1);
    assert(i >= 0 && i < k);
    SymFun r(k, f.cap());
    for (auto& [idx, c] : f.coeffs()) {
        PIndex j(k);
        j[i] = idx[0];
        r.add_term(j, c);
    }
    return r;
}

GradedSeries GradedSeries::one(int alphabets, int cap) {
    GradedSeries g(alphabets, cap);
    g.terms_[0] = SymFun::one(alphabets, cap);
    return g;
}

SymFun GradedSeries::term(int n) const {
    if (n > cap_) throw DegreeCapExceeded();
    auto it = terms_.find(n);
    return it == terms_.end() ? SymFun(k_, cap_) : it->second;
}

void GradedSeries::set_term(int n, const SymFun& f) {
    if (n > cap_) throw DegreeCapExceeded();
    if (f.is_zero())
        terms_.erase(n);
    else
        terms_[n] = f;
}

RatFun GradedSeries::constant() const { return term(0).coeff(PIndex(k_)); }

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    if (k_ != o.k_ || cap_ != o.cap_) throw AlphabetMismatch();
    for (auto& [n, f] : o.terms_) set_term(n, term(n) + f);
    return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    if (a.k_ != b.k_ || a.cap_ != b.cap_) throw AlphabetMismatch();
    GradedSeries r(a.k_, a.cap_);
    for (auto& [na, fa] : a.terms_)
        for (auto& [nb, fb] : b.terms_) {
            if (na + nb > a.cap_) continue;
            r.set_term(na + nb, r.term(na + nb) + fa * fb);
        }
    return r;
}

GradedSeries GradedSeries::scaled(const RatFun& c) const {
    GradedSeries r(k_, cap_);
    for (auto& [n, f] : terms_) r.set_term(n, f.scaled(c));
    return r;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
    if (a.k_ != b.k_ || a.cap_ != b.cap_) return false;
    return a.terms_ == b.terms_;
}

GradedSeries GradedSeries::adams(int d) const {
    GradedSeries r(k_, cap_);
    for (auto& [n, f] : terms_) {
        if (n * d > cap_) continue;
        r.set_term(n * d, f.adams(d));
    }
    return r;
}

GradedSeries pleth_exp(const GradedSeries& v) {
    if (!v.term(0).is_zero()) throw NonzeroConstantTerm();
    int k = v.alphabets(), cap = v.cap();
    GradedSeries w(k, cap);
    for (int d = 1; d <= cap; ++d) w += v.adams(d).scaled(RatFun(Rat(1, (unsigned long)d)));
    GradedSeries e = GradedSeries::one(k, cap);
    for (int n = 1; n <= cap; ++n) {
        SymFun en(k, cap);
        for (int j = 1; j <= n; ++j) en += (w.term(j) * e.term(n - j)).scaled(RatFun(Rat(j)));
        e.set_term(n, en.scaled(RatFun(Rat(1, (unsigned long)n))));
    }
    return e;
}

GradedSeries pleth_log(const GradedSeries& f) {
    if (!(f.term(0) == SymFun::one(f.alphabets(), f.cap()))) throw ConstantTermNotOne();
    int k = f.alphabets(), cap = f.cap();
    // ordinary log
    GradedSeries u(k, cap);
    for (int n = 1; n <= cap; ++n) {
        SymFun s(k, cap);
        for (int j = 1; j < n; ++j) s += (u.term(j) * f.term(n - j)).scaled(RatFun(Rat(j)));
        u.set_term(n, f.term(n) - s.scaled(RatFun(Rat(1, (unsigned long)n))));
    }
    // Moebius inversion of the Adams sum
    GradedSeries v(k, cap);
    for (int n = 1; n <= cap; ++n) {
        SymFun vn(k, cap);
        for (int d : divisors(n)) {
            int mu = mobius(d);
            if (mu == 0) continue;
            vn += u.term(n / d).adams(d).scaled(RatFun(Rat(mu, (unsigned long)d)));
        }
        v.set_term(n, vn);
    }
    return v;
}

GradedSeries log_via_types(const std::map<Partition, SymFun>& a, int alphabets, int cap) {
    GradedSeries v(alphabets, cap);
    for (int n = 1; n <= cap; ++n) {
        SymFun vn(alphabets, cap);
        for (auto& om : types_of(n)) {
            Rat c = c0(om);
            if (c == 0) continue;
            SymFun prod = SymFun::one(alphabets, cap);
            bool zero = false;
            for (auto& [d, la] : om.pairs()) {
                auto it = a.find(la);
                if (it == a.end() || it->second.is_zero()) {
                    zero = true;
                    break;
                }
                prod = prod * it->second.adams(d);
            }
            if (zero || prod.is_zero()) continue;
            vn += prod.scaled(RatFun(c));
        }
        v.set_term(n, vn);
    }
    return v;
}

}  // namespace cq
