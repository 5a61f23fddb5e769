#include "charquiv/polybases.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>

namespace cq {

// ---------------------------------------------------------------------------
// Cache location

namespace {
std::string g_cache_dir;
bool g_cache_dir_set = false;
constexpr const char* kCacheVersion = "charquiv-polybases v1";
}  // namespace

void set_cache_dir(const std::string& dir) {
    g_cache_dir = dir;
    g_cache_dir_set = true;
}

std::string cache_dir() {
    if (g_cache_dir_set) return g_cache_dir;
    if (const char* env = std::getenv("CHARQUIV_CACHE_DIR")) return env;
    return ".charquiv-cache";
}

// ---------------------------------------------------------------------------
// Macdonald polynomials by Gram-Schmidt in the monomial basis against the
// (q,t)-deformed power-sum pairing.

namespace {

RatFun pair_qt(const SymFun& f, const SymFun& g) {
    RatFun s;
    for (auto& [idx, cf] : f.coeffs()) {
        auto it = g.coeffs().find(idx);
        if (it == g.coeffs().end()) continue;
        const Partition& la = idx[0];
        RatFun z(Rat(z_part(la)));
        for (int r : la.parts()) {
            LaurentPoly2 nq = LaurentPoly2(1L) - LaurentPoly2::x(r);
            LaurentPoly2 nt = LaurentPoly2(1L) - LaurentPoly2::y(r);
            z *= RatFun(nq, nt);
        }
        s += cf * it->second * z;
    }
    return s;
}

SymFun map_coeffs(const SymFun& f, const std::function<RatFun(const PIndex&, const RatFun&)>& fn) {
    SymFun r(f.alphabets(), f.cap());
    for (auto& [idx, c] : f.coeffs()) r.add_term(idx, fn(idx, c));
    return r;
}

using SchurTable = std::map<Partition, std::map<Partition, LaurentPoly2>>;

SchurTable build_macdonald_degree(int n) {
    auto ps = partitions_of(n);  // lex descending, refines dominance
    int m = (int)ps.size();
    std::vector<SymFun> P(m);
    // Gram-Schmidt from the dominance-smallest partition upward.
    for (int i = m - 1; i >= 0; --i) {
        SymFun v = basis_element1(Basis::m, ps[i], n);
        for (int j = m - 1; j > i; --j) {
            RatFun c = pair_qt(v, P[j]) / pair_qt(P[j], P[j]);
            if (!c.is_zero()) v -= P[j].scaled(c);
        }
        P[i] = v;
    }
    SchurTable table;
    for (int i = 0; i < m; ++i) {
        const Partition& la = ps[i];
        // integral form J
        RatFun cfac(Rat(1));
        for (int r = 0; r < la.length(); ++r)
            for (int c = 0; c < la.part(r); ++c) {
                LaurentPoly2 f = LaurentPoly2(1L) -
                                 LaurentPoly2::x(la.arm(r, c)) * LaurentPoly2::y(la.leg(r, c) + 1);
                cfac *= RatFun(f);
            }
        SymFun J = P[i].scaled(cfac);
        // t -> 1/t, then p_r -> p_r / (1 - t^{-r}), then scale by t^{n(la)}
        RatFun tpow(LaurentPoly2::y((int)la.nstat()));
        SymFun H = map_coeffs(J, [&](const PIndex& idx, const RatFun& c) {
            RatFun f = c.exponents_scaled_xy(1, -1);
            for (int r : idx[0].parts()) {
                LaurentPoly2 den = LaurentPoly2(1L) - LaurentPoly2::y(-r);
                f = f / RatFun(den);
            }
            return f * tpow;
        });
        auto& row = table[la];
        for (auto& nu : ps) {
            RatFun c = hall_pair(H, basis_element1(Basis::s, nu, n));
            if (c.is_zero()) continue;
            row[nu] = c.as_polynomial();
        }
    }
    return table;
}

std::string poly_to_text(const LaurentPoly2& p) {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        if (!first) os << " ";
        first = false;
        os << e.first << ":" << e.second << ":" << c.get_str();
    }
    return os.str();
}

LaurentPoly2 poly_from_text(const std::string& text) {
    LaurentPoly2 p;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        auto c1 = tok.find(':');
        auto c2 = tok.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ParseError("bad cache term '" + tok + "'");
        int a = std::stoi(tok.substr(0, c1));
        int b = std::stoi(tok.substr(c1 + 1, c2 - c1 - 1));
        Rat c(tok.substr(c2 + 1));
        c.canonicalize();
        p.set_coeff(a, b, c);
    }
    return p;
}

bool load_degree_cache(int n, SchurTable& out) {
    std::string dir = cache_dir();
    if (dir.empty()) return false;
    std::ifstream in(dir + "/macdonald_deg" + std::to_string(n) + ".txt");
    if (!in) return false;
    try {
        std::string line;
        if (!std::getline(in, line) || line != kCacheVersion) return false;
        SchurTable table;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            // la | nu | terms
            auto b1 = line.find('|');
            auto b2 = line.find('|', b1 + 1);
            if (b1 == std::string::npos || b2 == std::string::npos) return false;
            Partition la = Partition::parse(line.substr(0, b1));
            Partition nu = Partition::parse(line.substr(b1 + 1, b2 - b1 - 1));
            table[la][nu] = poly_from_text(line.substr(b2 + 1));
        }
        // sanity: one row per partition of n
        if ((int)table.size() != (int)partitions_of(n).size()) return false;
        out = std::move(table);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void store_degree_cache(int n, const SchurTable& table) {
    std::string dir = cache_dir();
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    std::ofstream out(dir + "/macdonald_deg" + std::to_string(n) + ".txt");
    if (!out) return;
    out << kCacheVersion << "\n";
    for (auto& [la, row] : table)
        for (auto& [nu, poly] : row) out << la.str() << "|" << nu.str() << "|" << poly_to_text(poly) << "\n";
}

const SchurTable& macdonald_degree(int n) {
    static std::map<int, SchurTable> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    SchurTable table;
    if (!load_degree_cache(n, table)) {
        table = build_macdonald_degree(n);
        store_degree_cache(n, table);
    }
    return memo[n] = std::move(table);
}

}  // namespace

const std::map<Partition, LaurentPoly2>& macdonald_schur(const Partition& la) {
    return macdonald_degree(la.size()).at(la);
}

SymFun macdonald(const Partition& la, int cap) {
    SymFun f(1, cap);
    for (auto& [nu, c] : macdonald_schur(la))
        f += basis_element1(Basis::s, nu, cap).scaled(RatFun(c));
    return f;
}

// ---------------------------------------------------------------------------
// Kostka-Foulkes via the charge statistic.

namespace {

int charge_standard(const std::vector<int>& w) {
    int m = (int)w.size();
    std::vector<int> pos(m + 1, -1);
    for (int i = 0; i < m; ++i) pos[w[i]] = i;
    int idx = 0, total = 0;
    for (int r = 2; r <= m; ++r) {
        if (pos[r] > pos[r - 1]) ++idx;
        total += idx;
    }
    return total;
}

long charge_word(std::vector<int> w) {
    long total = 0;
    while (!w.empty()) {
        int n = (int)w.size();
        std::vector<char> used(n, 0);
        std::vector<int> chosen;
        int cur = n - 1;
        int target = 1;
        while (true) {
            int found = -1;
            for (int step = 0; step < n; ++step) {
                int i = ((cur - step) % n + n) % n;
                if (!used[i] && w[i] == target) {
                    found = i;
                    break;
                }
            }
            if (found < 0) break;
            used[found] = 1;
            chosen.push_back(found);
            cur = found - 1;
            ++target;
        }
        std::sort(chosen.begin(), chosen.end());
        std::vector<int> sw;
        for (int i : chosen) sw.push_back(w[i]);
        total += charge_standard(sw);
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
            if (!used[i]) rest.push_back(w[i]);
        w = std::move(rest);
    }
    return total;
}

// Enumerate semistandard tableaux of the given shape and content, calling
// `emit` with the reading word (rows bottom to top, left to right).
void enumerate_ssyt(const Partition& shape, const Partition& content,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    int rows = shape.length();
    std::vector<std::vector<int>> T(rows);
    for (int r = 0; r < rows; ++r) T[r].assign(shape.part(r), 0);
    std::vector<int> remaining(content.length() + 1, 0);
    for (int i = 0; i < content.length(); ++i) remaining[i + 1] = content.part(i);
    int maxv = content.length();
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            emit(T);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, T[r][c - 1]);
        if (r > 0 && c < shape.part(r - 1)) lo = std::max(lo, T[r - 1][c] + 1);
        for (int v = lo; v <= maxv; ++v) {
            if (remaining[v] == 0) continue;
            --remaining[v];
            T[r][c] = v;
            self(self, nr, nc);
            ++remaining[v];
        }
    };
    if (rows == 0)
        emit(T);
    else
        rec(rec, 0, 0);
}

}  // namespace

LaurentPoly2 kostka_foulkes_charge(const Partition& nu, const Partition& la) {
    if (nu.size() != la.size()) throw SizeMismatch();
    LaurentPoly2 k;
    long nst = la.nstat();
    enumerate_ssyt(nu, la, [&](const std::vector<std::vector<int>>& T) {
        std::vector<int> word;
        for (int r = (int)T.size() - 1; r >= 0; --r)
            for (int v : T[r]) word.push_back(v);
        long cc = nst - charge_word(word);
        assert(cc >= 0);
        k.set_coeff((int)cc, 0, k.coeff((int)cc, 0) + 1);
    });
    return k;
}

LaurentPoly2 kostka_foulkes(const Partition& nu, const Partition& la) {
    static std::map<std::pair<Partition, Partition>, LaurentPoly2> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(nu, la);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    return memo[key] = kostka_foulkes_charge(nu, la);
}

SymFun hall_littlewood(const Partition& la, int cap) {
    SymFun f(1, cap);
    for (auto& nu : partitions_of(la.size())) {
        LaurentPoly2 k = kostka_foulkes(nu, la);
        if (k.is_zero()) continue;
        f += basis_element1(Basis::s, nu, cap).scaled(RatFun(k));
    }
    return f;
}

LaurentPoly2 green_poly(const Partition& upper, const Partition& lower) {
    if (upper.size() != lower.size()) throw SizeMismatch();
    LaurentPoly2 q;
    for (auto& nu : partitions_of(upper.size())) {
        long ch = sym_char(nu, lower);
        if (ch == 0) continue;
        q += LaurentPoly2(Rat(ch)) * kostka_foulkes(nu, upper);
    }
    return q;
}

LaurentPoly2 green_poly(const TypeT& upper, const TypeT& lower) {
    if (!upper.similar(lower)) return LaurentPoly2();
    LaurentPoly2 q(1L);
    const auto& up = upper.pairs();
    const auto& lp = lower.pairs();
    for (size_t i = 0; i < up.size(); ++i) {
        assert(up[i].first == lp[i].first);
        q *= green_poly(up[i].second, lp[i].second).exponents_scaled(up[i].first);
    }
    return q;
}

// ---------------------------------------------------------------------------
// Hook functions.

RatFun hook_genus(const Partition& la, int g) {
    assert(g >= 0);
    RatFun h(Rat(1));
    auto Z = [](int e) { return LaurentPoly2::x(e); };
    auto W = [](int e) { return LaurentPoly2::y(e); };
    for (int r = 0; r < la.length(); ++r)
        for (int c = 0; c < la.part(r); ++c) {
            int a = la.arm(r, c), l = la.leg(r, c);
            RatFun num(Z(2 * a + 1) - W(2 * l + 1));
            h *= num.pow(2 * g);
            h /= RatFun(Z(2 * a + 2) - W(2 * l));
            h /= RatFun(Z(2 * a) - W(2 * l + 2));
        }
    return h;
}

HookSpecials hook_specials(const Partition& la, int g) {
    HookSpecials hs;
    long pr = la.pairing();
    // hook polynomial
    hs.hookpoly = LaurentPoly2(1L);
    for (int h : la.hooks()) hs.hookpoly *= LaurentPoly2(1L) - LaurentPoly2::x(h);
    // a_la(q) = q^{<la,la>} b_la(1/q), b_la(q) = prod_i prod_{j<=m_i} (1-q^j)
    LaurentPoly2 binv(1L);
    for (auto& [p, m] : la.multiplicities())
        for (int j = 1; j <= m; ++j) binv *= LaurentPoly2(1L) - LaurentPoly2::x(-j);
    hs.a_lambda = binv * LaurentPoly2::x((int)pr);
    // pure specialization
    hs.pure = RatFun(LaurentPoly2::x((int)(g * pr)), hs.a_lambda);
    // epoly specialization: q^{(1-g)<la,la>} H_la(q)^{2g-2}
    RatFun hp(hs.hookpoly);
    hs.epoly = hp.pow(2 * g - 2) * RatFun(LaurentPoly2::x((int)((1 - g) * pr)));
    return hs;
}

}  // namespace cq
