#include "charquiv/combinat.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

namespace cq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (int p : parts_) {
        if (p < 0) throw ParseError("negative part");
    }
}

Partition Partition::rectangle(int p, int n) {
    assert(p >= 1 && n >= 0);
    return Partition(std::vector<int>(n, p));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition();
    c.resize(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

long Partition::nstat() const {
    long s = 0;
    for (size_t i = 0; i < parts_.size(); ++i) s += (long)i * parts_[i];
    return s;
}

long Partition::pairing() const {
    long s = 0;
    for (int c : conjugate().parts_) s += (long)c * c;
    return s;
}

int Partition::leg(int i, int j) const {
    int cnt = 0;
    for (size_t r = i + 1; r < parts_.size(); ++r)
        if (parts_[r] > j) ++cnt;
    return cnt;
}

std::vector<int> Partition::hooks() const {
    std::vector<int> h;
    for (size_t i = 0; i < parts_.size(); ++i)
        for (int j = 0; j < parts_[i]; ++j) h.push_back(hook((int)i, j));
    std::sort(h.begin(), h.end(), std::greater<int>());
    return h;
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> m;
    for (int p : parts_) {
        if (!m.empty() && m.back().first == p)
            ++m.back().second;
        else
            m.emplace_back(p, 1);
    }
    return m;
}

Partition Partition::scaled(int d) const {
    std::vector<int> p(parts_);
    for (int& v : p) v *= d;
    return Partition(std::move(p));
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string t = text;
    if (t == "0" || t.empty()) return Partition();
    std::istringstream is(t);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw ParseError("empty part in '" + text + "'");
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v < 1) throw ParseError("bad part '" + tok + "'");
            parts.push_back(v);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad part '" + tok + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("part out of range '" + tok + "'");
        }
    }
    return Partition(std::move(parts));
}

Int z_part(const Partition& la) {
    Int z(1);
    for (auto& [p, m] : la.multiplicities()) {
        for (int i = 0; i < m; ++i) z *= p;
        z *= factorial(m);
    }
    return z;
}

std::vector<Partition> partitions_of(int n) {
    assert(n >= 0);
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending parts, first part at most `max`
    auto rec = [&](auto&& self, int rest, int maxp) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {

// Beta-set form of the Murnaghan–Nakayama rule: removing a border strip of
// length r corresponds to lowering one first-column hook length by r.
long mn_char(const std::vector<int>& la, std::vector<int> rho,
             std::map<std::pair<std::vector<int>, std::vector<int>>, long>& memo) {
    if (la.empty()) return 1;
    if (rho.empty()) return 0;  // size mismatch caught by caller
    auto key = std::make_pair(la, rho);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = rho.back();  // smallest part first keeps subproblems shared
    rho.pop_back();
    int L = (int)la.size();
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = la[i] + (L - 1 - i);
    long total = 0;
    for (int i = 0; i < L; ++i) {
        int nb = beta[i] - r;
        if (nb < 0) continue;
        bool clash = false;
        int between = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == nb) {
                clash = true;
                break;
            }
            if (beta[j] > nb && beta[j] < beta[i]) ++between;
        }
        if (clash) continue;
        std::vector<int> nbeta(beta);
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nla(L);
        for (int j = 0; j < L; ++j) nla[j] = nbeta[j] - (L - 1 - j);
        while (!nla.empty() && nla.back() == 0) nla.pop_back();
        long sub = mn_char(nla, rho, memo);
        total += (between % 2 ? -sub : sub);
    }
    memo[key] = total;
    return total;
}

}  // namespace

long sym_char(const Partition& la, const Partition& rho) {
    if (la.size() != rho.size()) throw SizeMismatch();
    static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, long> memo;
    return mn_char(la.parts(), rho.parts(), memo);
}

bool MultiPartition::equal_sizes() const {
    for (auto& c : components)
        if (c.size() != components.front().size()) return false;
    return true;
}

int MultiPartition::common_size() const {
    if (components.empty() || !equal_sizes()) throw SizeMismatch();
    return components.front().size();
}

std::string MultiPartition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) os << ";";
        os << components[i].str();
    }
    return os.str();
}

MultiPartition MultiPartition::parse(const std::string& text) {
    std::vector<Partition> comps;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ';')) comps.push_back(Partition::parse(tok));
    if (comps.empty()) throw ParseError("empty multipartition");
    return MultiPartition(std::move(comps));
}

namespace {
// Total order on pairs: by degree, then size, then lexicographic on parts.
bool pair_less(const TypeT::Pair& a, const TypeT::Pair& b) {
    if (a.first != b.first) return a.first < b.first;
    int sa = a.second.size(), sb = b.second.size();
    if (sa != sb) return sa < sb;
    return a.second.parts() < b.second.parts();
}
}  // namespace

TypeT::TypeT(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    for (auto& [d, la] : pairs_) {
        assert(d >= 1);
        assert(!la.empty());
    }
    std::sort(pairs_.begin(), pairs_.end(),
              [](const Pair& a, const Pair& b) { return pair_less(b, a); });
}

int TypeT::size() const {
    int s = 0;
    for (auto& [d, la] : pairs_) s += d * la.size();
    return s;
}

int TypeT::f() const {
    int s = 0;
    for (auto& [d, la] : pairs_) s += la.size();
    return s;
}

long TypeT::nstat() const {
    long s = 0;
    for (auto& [d, la] : pairs_) s += (long)d * la.nstat();
    return s;
}

Partition TypeT::bracket() const {
    std::vector<int> parts;
    for (auto& [d, la] : pairs_)
        for (int p : la.parts()) parts.push_back(d * p);
    return Partition(std::move(parts));
}

std::vector<std::pair<TypeT::Pair, int>> TypeT::multiplicities() const {
    std::vector<std::pair<Pair, int>> m;
    for (auto& pr : pairs_) {
        if (!m.empty() && m.back().first == pr)
            ++m.back().second;
        else
            m.emplace_back(pr, 1);
    }
    return m;
}

Int TypeT::worder() const {
    Int w(1);
    for (auto& [pr, m] : multiplicities()) {
        for (int i = 0; i < m; ++i) w *= pr.first;
        w *= factorial(m);
    }
    return w;
}

int TypeT::concentrated_degree() const {
    if (pairs_.empty()) return 0;
    int d = pairs_.front().first;
    for (auto& [dd, la] : pairs_)
        if (dd != d) return 0;
    return d;
}

std::vector<std::pair<int, int>> TypeT::degree_profile() const {
    std::vector<std::pair<int, int>> p;
    for (auto& [d, la] : pairs_) p.emplace_back(d, la.size());
    return p;
}

std::string TypeT::str() const {
    std::ostringstream os;
    for (auto& [d, la] : pairs_) os << "(" << d << ",(" << la.str() << "))";
    return os.str();
}

std::vector<TypeT> types_of(int n) {
    assert(n >= 1);
    // All candidate pairs, sorted descending in the canonical order.
    std::vector<TypeT::Pair> cand;
    for (int d = 1; d <= n; ++d)
        for (int m = 1; d * m <= n; ++m)
            for (auto& la : partitions_of(m)) cand.emplace_back(d, la);
    std::sort(cand.begin(), cand.end(),
              [](const TypeT::Pair& a, const TypeT::Pair& b) { return pair_less(b, a); });
    std::vector<TypeT> out;
    std::vector<TypeT::Pair> cur;
    auto rec = [&](auto&& self, int rest, size_t from) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (size_t i = from; i < cand.size(); ++i) {
            int w = cand[i].first * cand[i].second.size();
            if (w > rest) continue;
            cur.push_back(cand[i]);
            self(self, rest - w, i);  // allow repeats, keep non-increasing
            cur.pop_back();
        }
    };
    rec(rec, n, 0);
    return out;
}

Int k0(const TypeT& om) {
    int d = om.concentrated_degree();
    if (d == 0 || mobius(d) == 0) return Int(0);
    int r = (int)om.pairs().size();
    Int v = factorial(r - 1) * mobius(d);
    for (int i = 0; i < r - 1; ++i) v *= d;
    if ((r - 1) % 2) v = -v;
    return v;
}

Rat c0(const TypeT& om) {
    int d = om.concentrated_degree();
    if (d == 0 || mobius(d) == 0) return Rat(0);
    int r = (int)om.pairs().size();
    Rat v = Rat(factorial(r - 1)) * mobius(d) / d;
    if ((r - 1) % 2) v = -v;
    for (auto& [pr, m] : om.multiplicities()) v /= Rat(factorial(m));
    return v;
}

int mobius(int n) {
    assert(n >= 1);
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

int divisor_sigma(int n) {
    int s = 0;
    for (int d : divisors(n)) s += d;
    return s;
}

std::vector<int> divisors(int n) {
    assert(n >= 1);
    std::vector<int> d;
    for (int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

Int factorial(int n) {
    Int f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace cq
