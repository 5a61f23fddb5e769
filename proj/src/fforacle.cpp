#include "charquiv/fforacle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace cq {

Fq::Fq(long p) : p_(p) {
    if (p < 2) throw std::invalid_argument("field characteristic");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("characteristic not prime");
}

long Fq::pow(long a, long e) const {
    long r = 1 % p_, base = (a % p_ + p_) % p_;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base % p_;
        base = base * base % p_;
    }
    return r;
}

long Fq::inv(long a) const {
    if (a % p_ == 0) throw std::invalid_argument("inverse of zero");
    return pow(a, p_ - 2);
}

FqMatrix mat_identity(int n) {
    FqMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FqMatrix mat_add(const Fq& F, const FqMatrix& a, const FqMatrix& b) {
    FqMatrix r(a.n);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = F.add(a.e[i], b.e[i]);
    return r;
}

FqMatrix mat_sub(const Fq& F, const FqMatrix& a, const FqMatrix& b) {
    FqMatrix r(a.n);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = F.sub(a.e[i], b.e[i]);
    return r;
}

FqMatrix mat_neg(const Fq& F, const FqMatrix& a) {
    FqMatrix r(a.n);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = F.neg(a.e[i]);
    return r;
}

FqMatrix mat_mul(const Fq& F, const FqMatrix& a, const FqMatrix& b) {
    FqMatrix r(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            long v = a.at(i, k);
            if (!v) continue;
            for (int j = 0; j < a.n; ++j)
                r.at(i, j) = (r.at(i, j) + v * b.at(k, j)) % F.q();
        }
    return r;
}

long mat_trace(const Fq& F, const FqMatrix& a) {
    long t = 0;
    for (int i = 0; i < a.n; ++i) t = F.add(t, a.at(i, i));
    return t;
}

long mat_det(const Fq& F, const FqMatrix& a) {
    FqMatrix m = a;
    long det = 1;
    for (int col = 0; col < m.n; ++col) {
        int piv = -1;
        for (int r = col; r < m.n; ++r)
            if (m.at(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < m.n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = F.neg(det);
        }
        det = F.mul(det, m.at(col, col));
        long ip = F.inv(m.at(col, col));
        for (int r = col + 1; r < m.n; ++r) {
            long f = F.mul(m.at(r, col), ip);
            if (!f) continue;
            for (int j = col; j < m.n; ++j)
                m.at(r, j) = F.sub(m.at(r, j), F.mul(f, m.at(col, j)));
        }
    }
    return det;
}

FqMatrix mat_inv(const Fq& F, const FqMatrix& a) {
    FqMatrix m = a, r = mat_identity(a.n);
    for (int col = 0; col < m.n; ++col) {
        int piv = -1;
        for (int i = col; i < m.n; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::invalid_argument("singular matrix");
        for (int j = 0; j < m.n; ++j) {
            std::swap(m.at(piv, j), m.at(col, j));
            std::swap(r.at(piv, j), r.at(col, j));
        }
        long ip = F.inv(m.at(col, col));
        for (int j = 0; j < m.n; ++j) {
            m.at(col, j) = F.mul(m.at(col, j), ip);
            r.at(col, j) = F.mul(r.at(col, j), ip);
        }
        for (int i = 0; i < m.n; ++i) {
            if (i == col || !m.at(i, col)) continue;
            long f = m.at(i, col);
            for (int j = 0; j < m.n; ++j) {
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(col, j)));
                r.at(i, j) = F.sub(r.at(i, j), F.mul(f, r.at(col, j)));
            }
        }
    }
    return r;
}

namespace {

// Dense univariate polynomials over F_q, ascending coefficients.
using UPolyF = std::vector<long>;

void ptrim(UPolyF& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPolyF pmul(const Fq& F, const UPolyF& a, const UPolyF& b) {
    if (a.empty() || b.empty()) return {};
    UPolyF r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % F.q();
    ptrim(r);
    return r;
}

UPolyF psub(const Fq& F, UPolyF a, const UPolyF& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    ptrim(a);
    return a;
}

// Remainder and quotient of a by nonzero b.
std::pair<UPolyF, UPolyF> pdivmod(const Fq& F, UPolyF a, const UPolyF& b) {
    UPolyF q;
    long il = F.inv(b.back());
    while (a.size() >= b.size()) {
        long f = F.mul(a.back(), il);
        size_t sh = a.size() - b.size();
        if (q.size() < sh + 1) q.resize(sh + 1, 0);
        q[sh] = f;
        for (size_t i = 0; i < b.size(); ++i)
            a[sh + i] = F.sub(a[sh + i], F.mul(f, b[i]));
        ptrim(a);
        if (a.empty()) break;
    }
    ptrim(q);
    return {q, a};
}

UPolyF pgcd(const Fq& F, UPolyF a, UPolyF b) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        auto [q, r] = pdivmod(F, a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long il = F.inv(a.back());
        for (long& x : a) x = F.mul(x, il);
    }
    return a;
}

UPolyF pderiv(const Fq& F, const UPolyF& a) {
    UPolyF r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(F.mul(a[i], i % F.q()));
    ptrim(r);
    return r;
}

FqMatrix peval_mat(const Fq& F, const UPolyF& p, const FqMatrix& m) {
    FqMatrix acc(m.n);
    for (size_t i = p.size(); i-- > 0;) {
        acc = mat_mul(F, acc, m);
        for (int d = 0; d < m.n; ++d) acc.at(d, d) = F.add(acc.at(d, d), p[i]);
    }
    return acc;
}

// Determinant of a matrix with polynomial entries by cofactor expansion.
UPolyF pdet(const Fq& F, const std::vector<std::vector<UPolyF>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    UPolyF total;
    for (size_t r = 0; r < n; ++r) {
        if (m[r][0].empty()) continue;
        std::vector<std::vector<UPolyF>> minor;
        for (size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.push_back(std::vector<UPolyF>(m[i].begin() + 1, m[i].end()));
        }
        UPolyF term = pmul(F, m[r][0], pdet(F, minor));
        if (r % 2)
            for (long& x : term) x = F.neg(x);
        UPolyF neg = term;
        for (long& x : neg) x = F.neg(x);
        total = psub(F, total, neg);
    }
    return total;
}

}  // namespace

std::vector<long> mat_charpoly(const Fq& F, const FqMatrix& m) {
    std::vector<std::vector<UPolyF>> xm(m.n, std::vector<UPolyF>(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            UPolyF p{F.neg(m.at(i, j))};
            if (i == j) p.push_back(1);
            ptrim(p);
            xm[i][j] = p;
        }
    UPolyF d = pdet(F, xm);
    d.resize(m.n + 1, 0);
    return d;
}

bool mat_semisimple(const Fq& F, const FqMatrix& m) {
    UPolyF c = mat_charpoly(F, m);
    UPolyF g = pgcd(F, c, pderiv(F, c));
    if (g.size() <= 1) return true;
    UPolyF radical = pdivmod(F, c, g).first;
    FqMatrix z = peval_mat(F, radical, m);
    return z == FqMatrix(m.n);
}

bool ConjClassFq::contains(const Fq& F, const FqMatrix& m) const {
    if (mat_charpoly(F, m) != charpoly) return false;
    return mat_semisimple(F, m) == semisimple;
}

Int gl_order(int n, long q) {
    Int qn(1), total(1);
    for (int i = 0; i < n; ++i) qn *= q;
    Int qi(1);
    for (int i = 0; i < n; ++i) {
        total *= qn - qi;
        qi *= q;
    }
    return total;
}

ConjClassFq semisimple_class(const Fq& F, const Partition& mu, const std::vector<long>& eigs) {
    if ((int)eigs.size() != mu.length()) throw std::invalid_argument("eigenvalue count");
    for (size_t i = 0; i < eigs.size(); ++i)
        for (size_t j = i + 1; j < eigs.size(); ++j)
            if (eigs[i] % F.q() == eigs[j] % F.q())
                throw std::invalid_argument("repeated eigenvalue");
    ConjClassFq c;
    c.n = mu.size();
    c.rep = FqMatrix(c.n);
    UPolyF cp{1};
    int pos = 0;
    c.size = gl_order(c.n, F.q());
    for (int j = 0; j < mu.length(); ++j) {
        long a = (eigs[j] % F.q() + F.q()) % F.q();
        for (int r = 0; r < mu.part(j); ++r) {
            c.rep.at(pos, pos) = a;
            ++pos;
            cp = pmul(F, cp, UPolyF{F.neg(a), 1});
        }
        c.size /= gl_order(mu.part(j), F.q());
    }
    c.charpoly.assign(cp.begin(), cp.end());
    c.charpoly.resize(c.n + 1, 0);
    c.semisimple = true;
    return c;
}

namespace {

// Achievable products (or sums) of size-m sub-multisets of the eigenvalue
// multiset of one component.
void achievable_rec(const Fq& F, const Partition& mu, const std::vector<long>& eigs,
                    size_t j, int left, long acc, bool additive, std::vector<bool>& out) {
    if (left == 0) {
        out[acc] = true;
        return;
    }
    if (j >= eigs.size()) return;
    long v = acc;
    for (int c = 0; c <= std::min(mu.part((int)j), left); ++c) {
        achievable_rec(F, mu, eigs, j + 1, left - c, v, additive, out);
        v = additive ? F.add(v, eigs[j]) : F.mul(v, eigs[j]);
    }
}

std::vector<bool> achievable(const Fq& F, const Partition& mu, const std::vector<long>& eigs,
                             int m, bool additive) {
    std::vector<bool> out(F.q(), false);
    achievable_rec(F, mu, eigs, 0, m, additive ? 0 : 1, additive, out);
    return out;
}

bool generic_check(const Fq& F, const MultiPartition& mu, const EigTuple& eigs, bool additive) {
    int k = mu.k(), n = mu.common_size();
    if ((int)eigs.size() != k) return false;
    long target = additive ? 0 : 1;
    long total = additive ? 0 : 1;
    for (int i = 0; i < k; ++i) {
        auto& comp = mu.components[i];
        if ((int)eigs[i].size() != comp.length()) return false;
        for (size_t a = 0; a < eigs[i].size(); ++a) {
            long v = eigs[i][a];
            if (v < 0 || v >= F.q()) return false;
            if (!additive && v == 0) return false;
            for (size_t b = a + 1; b < eigs[i].size(); ++b)
                if (eigs[i][b] == v) return false;
            for (int rep = 0; rep < comp.part((int)a); ++rep)
                total = additive ? F.add(total, v) : F.mul(total, v);
        }
    }
    if (total != target) return false;
    for (int m = 1; m < n; ++m) {
        // does some choice of size-m sub-multisets multiply (add) to target?
        std::vector<bool> reach(F.q(), false);
        reach[target] = true;
        for (int i = 0; i < k; ++i) {
            std::vector<bool> s = achievable(F, mu.components[i], eigs[i], m, additive);
            std::vector<bool> next(F.q(), false);
            for (long r = 0; r < F.q(); ++r) {
                if (!reach[r]) continue;
                for (long v = 0; v < F.q(); ++v)
                    if (s[v]) next[additive ? F.add(r, v) : F.mul(r, v)] = true;
            }
            reach = std::move(next);
        }
        if (reach[target]) return false;
    }
    return true;
}

bool assign_rec(const Fq& F, const MultiPartition& mu, EigTuple& eigs, int i, bool additive) {
    if (i == mu.k()) return generic_check(F, mu, eigs, additive);
    int r = mu.components[i].length();
    std::vector<long>& slot = eigs[i];
    slot.assign(r, 0);
    long lo = additive ? 0 : 1;
    // ordered tuples of distinct values, lexicographic
    std::function<bool(int)> fill = [&](int j) -> bool {
        if (j == r) return assign_rec(F, mu, eigs, i + 1, additive);
        for (long v = lo; v < F.q(); ++v) {
            bool used = false;
            for (int l = 0; l < j; ++l) used |= slot[l] == v;
            if (used) continue;
            slot[j] = v;
            if (fill(j + 1)) return true;
        }
        return false;
    };
    return fill(0);
}

}  // namespace

bool is_generic_mult(const Fq& F, const MultiPartition& mu, const EigTuple& eigs) {
    return generic_check(F, mu, eigs, false);
}

bool is_generic_add(const Fq& F, const MultiPartition& mu, const EigTuple& eigs) {
    return generic_check(F, mu, eigs, true);
}

EigTuple find_generic_mult(const MultiPartition& mu, long q) {
    Fq F(q);
    EigTuple eigs(mu.k());
    if (!assign_rec(F, mu, eigs, 0, false)) throw NotFound();
    return eigs;
}

EigTuple find_generic_add(const MultiPartition& mu, long q) {
    int g = 0;
    for (auto& c : mu.components)
        for (int p : c.parts()) g = std::gcd(g, p);
    if (g != 1) throw DivisibleMu();
    Fq F(q);
    EigTuple eigs(mu.k());
    if (!assign_rec(F, mu, eigs, 0, true)) throw NotFound();
    return eigs;
}

namespace {

std::vector<FqMatrix> all_matrices(const Fq& F, int n) {
    std::vector<FqMatrix> out;
    FqMatrix m(n);
    size_t cells = (size_t)n * n;
    while (true) {
        out.push_back(m);
        size_t i = 0;
        for (; i < cells; ++i) {
            if (++m.e[i] < F.q()) break;
            m.e[i] = 0;
        }
        if (i == cells) break;
    }
    return out;
}

std::vector<FqMatrix> group_elements(const Fq& F, int n) {
    std::vector<FqMatrix> out;
    for (auto& m : all_matrices(F, n))
        if (mat_det(F, m)) out.push_back(m);
    return out;
}

std::vector<FqMatrix> class_elements(const Fq& F, const ConjClassFq& c) {
    std::vector<FqMatrix> out;
    for (auto& m : all_matrices(F, c.n))
        if (c.contains(F, m)) out.push_back(m);
    return out;
}

}  // namespace

Int count_char_points(const Fq& F, int g, const std::vector<ConjClassFq>& classes,
                      long budget) {
    if (classes.empty()) throw std::invalid_argument("need at least one class");
    int n = classes[0].n;
    std::vector<FqMatrix> G;
    Int space(1);
    if (g > 0) {
        G = group_elements(F, n);
        for (int i = 0; i < 2 * g; ++i) space *= (long)G.size();
    }
    std::vector<std::vector<FqMatrix>> lists;
    for (size_t i = 0; i + 1 < classes.size(); ++i) {
        lists.push_back(class_elements(F, classes[i]));
        space *= (long)lists.back().size();
    }
    if (space > budget) throw BudgetExceeded();
    const ConjClassFq& last = classes.back();
    Int count(0);
    std::function<void(size_t, const FqMatrix&)> over_classes = [&](size_t i,
                                                                    const FqMatrix& acc) {
        if (i == lists.size()) {
            if (last.contains(F, mat_inv(F, acc))) count += 1;
            return;
        }
        for (auto& x : lists[i]) over_classes(i + 1, mat_mul(F, acc, x));
    };
    std::function<void(int, const FqMatrix&)> over_pairs = [&](int j, const FqMatrix& acc) {
        if (j == g) {
            over_classes(0, acc);
            return;
        }
        for (auto& a : G) {
            FqMatrix ia = mat_inv(F, a);
            for (auto& b : G) {
                FqMatrix comm = mat_mul(F, mat_mul(F, a, b),
                                        mat_mul(F, ia, mat_inv(F, b)));
                over_pairs(j + 1, mat_mul(F, acc, comm));
            }
        }
    };
    over_pairs(0, mat_identity(n));
    return count;
}

Int count_quiver_points(const Fq& F, int g, const std::vector<AdjOrbitFq>& orbits,
                        long budget) {
    if (orbits.empty()) throw std::invalid_argument("need at least one orbit");
    int n = orbits[0].n;
    std::vector<FqMatrix> A;
    Int space(1);
    if (g > 0) {
        A = all_matrices(F, n);
        for (int i = 0; i < 2 * g; ++i) space *= (long)A.size();
    }
    std::vector<std::vector<FqMatrix>> lists;
    for (size_t i = 0; i + 1 < orbits.size(); ++i) {
        lists.push_back(class_elements(F, orbits[i]));
        space *= (long)lists.back().size();
    }
    if (space > budget) throw BudgetExceeded();
    const AdjOrbitFq& last = orbits.back();
    Int count(0);
    std::function<void(size_t, const FqMatrix&)> over_orbits = [&](size_t i,
                                                                   const FqMatrix& acc) {
        if (i == lists.size()) {
            if (last.contains(F, mat_neg(F, acc))) count += 1;
            return;
        }
        for (auto& x : lists[i]) over_orbits(i + 1, mat_add(F, acc, x));
    };
    std::function<void(int, const FqMatrix&)> over_pairs = [&](int j, const FqMatrix& acc) {
        if (j == g) {
            over_orbits(0, acc);
            return;
        }
        for (auto& a : A)
            for (auto& b : A) {
                FqMatrix comm = mat_sub(F, mat_mul(F, a, b), mat_mul(F, b, a));
                over_pairs(j + 1, mat_add(F, acc, comm));
            }
    };
    over_pairs(0, FqMatrix(n));
    return count;
}

// ---------------------------------------------------------------- cyclotomic

Cyc Cyc::root(long order, long k) {
    Cyc c(order);
    c.c[((k % order) + order) % order] = 1;
    return c;
}

Cyc Cyc::scalar(long order, const Rat& v) {
    Cyc c(order);
    c.c[0] = v;
    return c;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    for (long i = 0; i < N; ++i) c[i] += o.c[i];
    return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    Cyc r(a.N);
    for (long i = 0; i < a.N; ++i) {
        if (a.c[i] == 0) continue;
        for (long j = 0; j < a.N; ++j) {
            if (b.c[j] == 0) continue;
            r.c[(i + j) % a.N] += a.c[i] * b.c[j];
        }
    }
    return r;
}

Cyc Cyc::scaled(const Rat& v) const {
    Cyc r(N);
    for (long i = 0; i < N; ++i) r.c[i] = c[i] * v;
    return r;
}

Cyc Cyc::conj() const {
    Cyc r(N);
    for (long i = 0; i < N; ++i) r.c[(N - i) % N] = c[i];
    return r;
}

namespace {

using QPoly = std::vector<Rat>;  // ascending

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qdiv_exact(QPoly a, const QPoly& b) {
    QPoly q;
    while (a.size() >= b.size()) {
        Rat f = a.back() / b.back();
        size_t sh = a.size() - b.size();
        if (q.size() < sh + 1) q.resize(sh + 1, Rat(0));
        q[sh] = f;
        for (size_t i = 0; i < b.size(); ++i) a[sh + i] -= f * b[i];
        qtrim(a);
        if (a.empty()) break;
    }
    return q;
}

const QPoly& cyclotomic(long n) {
    static std::map<long, QPoly> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    QPoly p(n + 1, Rat(0));
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = qdiv_exact(std::move(p), cyclotomic(d));
    return memo.emplace(n, std::move(p)).first->second;
}

}  // namespace

Rat Cyc::rational_value() const {
    QPoly p(c.begin(), c.end());
    qtrim(p);
    const QPoly& phi = cyclotomic(N);
    while (p.size() >= phi.size()) {
        Rat f = p.back() / phi.back();
        size_t sh = p.size() - phi.size();
        for (size_t i = 0; i < phi.size(); ++i) p[sh + i] -= f * phi[i];
        qtrim(p);
    }
    if (p.size() > 1) throw NonIntegerResult();
    return p.empty() ? Rat(0) : p[0];
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool first = true;
    for (long i = N; i-- > 0;) {
        if (c[i] == 0) continue;
        Rat v = c[i];
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        Rat av = abs(v);
        if (av != 1 || i == 0) os << av.get_str();
        if (i > 0) {
            if (av != 1) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ------------------------------------------------------------- GL_2 table

CharTableGL2::CharTableGL2(long q) : q_(q) {
    Fq F(q);
    if (q % 2 == 0) throw std::invalid_argument("odd characteristic required");
    long N = q * q - 1;
    // F_{q^2} = F_q[t]/(t^2 - c) for a non-residue c
    long c = 0;
    for (long v = 2; v < q; ++v) {
        bool residue = false;
        for (long s = 1; s < q; ++s) residue |= F.mul(s, s) == v;
        if (!residue) {
            c = v;
            break;
        }
    }
    auto f2mul = [&](std::pair<long, long> x, std::pair<long, long> y) {
        return std::pair<long, long>{
            F.add(F.mul(x.first, y.first), F.mul(c, F.mul(x.second, y.second))),
            F.add(F.mul(x.first, y.second), F.mul(x.second, y.first))};
    };
    // generator of F_{q^2}^*
    std::pair<long, long> gen{0, 0};
    for (long u = 0; u < q && !gen.first && !gen.second; ++u)
        for (long v = 0; v < q; ++v) {
            if (u == 0 && v == 0) continue;
            std::pair<long, long> x{u, v}, acc{1, 0};
            long order = 0;
            do {
                acc = f2mul(acc, x);
                ++order;
            } while (acc != std::pair<long, long>{1, 0});
            if (order == N) {
                gen = x;
                break;
            }
        }
    // powers of the generator; dlog of F_q^* with respect to gen^{q+1}
    std::vector<std::pair<long, long>> pow(N);
    std::pair<long, long> acc{1, 0};
    for (long m = 0; m < N; ++m) {
        pow[m] = acc;
        acc = f2mul(acc, gen);
    }
    dlog_.assign(q, -1);
    for (long m = 0; m < q - 1; ++m) dlog_[pow[(q + 1) * m % N].first] = m;
    gen_ = N;

    auto cp_double = [&](long a) {
        return std::vector<long>{F.mul(a, a), F.neg(F.add(a, a)), 1};
    };
    for (long a = 1; a < q; ++a) {
        GL2Class cl{0, dlog_[a], 0, Int(1), cp_double(a), true};
        classes_.push_back(cl);
    }
    for (long a = 1; a < q; ++a) {
        GL2Class cl{1, dlog_[a], 0, Int(q * q - 1), cp_double(a), false};
        classes_.push_back(cl);
    }
    for (long a = 1; a < q; ++a)
        for (long b = a + 1; b < q; ++b) {
            std::vector<long> cp{F.mul(a, b), F.neg(F.add(a, b)), 1};
            GL2Class cl{2, dlog_[a], dlog_[b], Int(q * (q + 1)), cp, true};
            classes_.push_back(cl);
        }
    for (long m = 1; m < N; ++m) {
        if (m % (q + 1) == 0) continue;
        long mc = m * q % N;
        if (mc < m) continue;
        auto [u, v] = pow[m];
        // trace 2u, norm u^2 - c v^2
        std::vector<long> cp{F.sub(F.mul(u, u), F.mul(c, F.mul(v, v))),
                             F.neg(F.add(u, u)), 1};
        GL2Class cl{3, m, 0, Int(q * (q - 1)), cp, true};
        classes_.push_back(cl);
    }

    for (long i = 0; i < q - 1; ++i) chars_.push_back({0, i, 0, 1});
    for (long i = 0; i < q - 1; ++i) chars_.push_back({1, i, 0, q});
    for (long i = 0; i < q - 1; ++i)
        for (long j = i + 1; j < q - 1; ++j) chars_.push_back({2, i, j, q + 1});
    for (long m = 1; m < N; ++m) {
        if (m % (q + 1) == 0) continue;
        if (m * q % N < m) continue;
        chars_.push_back({3, m, 0, q - 1});
    }
}

Cyc CharTableGL2::value(const GL2Char& chi, const GL2Class& cls) const {
    long N = q_ * q_ - 1, s = q_ + 1;
    auto z = [&](long e) { return Cyc::root(N, e); };
    switch (chi.family) {
        case 0:
            switch (cls.family) {
                case 0:
                case 1: return z(2 * chi.i * s * cls.a);
                case 2: return z(chi.i * s * (cls.a + cls.b));
                default: return z(chi.i * s * cls.a);  // det = norm
            }
        case 1:
            switch (cls.family) {
                case 0: return z(2 * chi.i * s * cls.a).scaled(Rat(q_));
                case 1: return Cyc(N);
                case 2: return z(chi.i * s * (cls.a + cls.b));
                default: return z(chi.i * s * cls.a).scaled(Rat(-1));
            }
        case 2:
            switch (cls.family) {
                case 0: return z((chi.i + chi.j) * s * cls.a).scaled(Rat(q_ + 1));
                case 1: return z((chi.i + chi.j) * s * cls.a);
                case 2:
                    return z(s * (chi.i * cls.a + chi.j * cls.b)) +
                           z(s * (chi.i * cls.b + chi.j * cls.a));
                default: return Cyc(N);
            }
        default:
            switch (cls.family) {
                case 0: return z(chi.i * s * cls.a).scaled(Rat(q_ - 1));
                case 1: return z(chi.i * s * cls.a).scaled(Rat(-1));
                case 2: return Cyc(N);
                default:
                    return (z(chi.i * cls.a) + z(chi.i * cls.a % N * q_)).scaled(Rat(-1));
            }
    }
}

int CharTableGL2::class_index(const ConjClassFq& c) const {
    for (size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].charpoly == c.charpoly && classes_[i].semisimple == c.semisimple)
            return (int)i;
    throw std::invalid_argument("class not in table");
}

CharTableGL2 gl2_char_table(long q) { return CharTableGL2(q); }

namespace {

Rat rat_pow(const Rat& b, long e) {
    Rat r(1), base = b;
    long n = e < 0 ? -e : e;
    for (; n > 0; n >>= 1) {
        if (n & 1) r *= base;
        base *= base;
    }
    if (e < 0) r = 1 / r;
    return r;
}

}  // namespace

Int count_via_group_fourier(int g, const std::vector<ConjClassFq>& classes,
                            const CharTableGL2& table) {
    if (classes.empty() || classes[0].n != 2)
        throw std::invalid_argument("table only covers GL_2");
    long q = table.q(), N = q * q - 1;
    Int order = gl_order(2, q);
    Rat sizes(1);
    for (auto& c : classes) sizes *= Rat(c.size);
    std::vector<int> idx;
    for (auto& c : classes) idx.push_back(table.class_index(c));
    Cyc total(N);
    long e = 2 * g - 2 + (long)classes.size();
    for (auto& chi : table.chars()) {
        Cyc prod = Cyc::scalar(N, Rat(1));
        for (int i : idx) prod = prod * table.value(chi, table.classes()[i]);
        total += prod.scaled(rat_pow(Rat(chi.degree), -e));
    }
    Rat value = total.rational_value() * sizes * rat_pow(Rat(order), 2 * g - 1);
    if (value.get_den() != 1) throw NonIntegerResult();
    return value.get_num();
}

Int count_via_add_fourier(const Fq& F, int g, const std::vector<AdjOrbitFq>& orbits) {
    if (orbits.empty() || orbits[0].n > 2)
        throw std::invalid_argument("additive Fourier covers n <= 2");
    int n = orbits[0].n;
    long p = F.q();
    // group all of gl_n into adjoint orbits keyed by (charpoly, semisimple)
    std::map<std::pair<std::vector<long>, bool>, std::vector<FqMatrix>> groups;
    for (auto& m : all_matrices(F, n))
        groups[{mat_charpoly(F, m), mat_semisimple(F, m)}].push_back(m);
    Rat sizeA = rat_pow(Rat(p), n * n);
    Cyc total(p);
    for (auto& [key, elems] : groups) {
        long osize = (long)elems.size();
        int dimc;
        if (n == 1) {
            dimc = 1;
        } else {
            bool central = osize == 1;
            dimc = central ? 4 : 2;
        }
        // L(chi)^g with L = |A| q^{dim C}
        Rat lg = rat_pow(sizeA * rat_pow(Rat(p), dimc), g);
        Rat coeff = Rat(osize) / sizeA * lg;
        Cyc prod = Cyc::scalar(p, Rat(1));
        for (auto& o : orbits) {
            Cyc chi(p);
            for (auto& b : elems)
                chi += Cyc::root(p, mat_trace(F, mat_mul(F, b, o.rep)));
            prod = prod * chi;
            coeff *= Rat(o.size) / Rat(osize);
        }
        total += prod.scaled(coeff);
    }
    Rat value = total.rational_value();
    if (value.get_den() != 1) throw NonIntegerResult();
    return value.get_num();
}

}  // namespace cq
