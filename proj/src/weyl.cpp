#include "heckec/weyl.hpp"

#include <deque>
#include <map>
#include <memory>
#include <mutex>

namespace heckec {

std::string familyName(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::D: return "D";
    }
    return "?";
}

void validateType(const WeylType& t, bool allowSmallD) {
    if (t.n < 1 || t.n > kMaxRank)
        throw ArgumentError("rank out of range for " + t.str());
    switch (t.family) {
        case Family::A:
            return;
        case Family::B:
            if (t.n < 2) throw ArgumentError("type B needs n >= 2");
            return;
        case Family::D:
            if (t.n < 2 || (t.n < 4 && !allowSmallD))
                throw ArgumentError("type D needs n >= 4 (n in {2,3} only with the non-irreducible flag)");
            return;
    }
}

bool SignedPerm::isIdentity() const {
    for (int i = 0; i < n_; ++i)
        if (perm_[i] != i + 1 || sign_[i] != 1) return false;
    return true;
}

std::pair<int, int> SignedPerm::act(int i) const {
    if (i < 1 || i > n_) throw ArgumentError("index out of range in act");
    return {perm_[i - 1], sign_[i - 1]};
}

SignedPerm SignedPerm::compose(const SignedPerm& o) const {
    if (n_ != o.n_) throw ArgumentError("rank mismatch in compose");
    SignedPerm r(n_);
    for (int i = 1; i <= n_; ++i) {
        auto [j, s1] = o.act(i);
        auto [k, s2] = act(j);
        r.setImage(i, k, s1 * s2);
    }
    return r;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm r(n_);
    for (int i = 1; i <= n_; ++i) {
        auto [j, s] = act(i);
        r.setImage(j, i, s);
    }
    return r;
}

std::pair<int, ExpVec> SignedPerm::actExp(const ExpVec& a) const {
    if (a.n != n_) throw ArgumentError("rank mismatch in actExp");
    ExpVec out(n_);
    int sgn = 1;
    for (int i = 0; i < n_; ++i) {
        out.e[perm_[i] - 1] = a.e[i];
        if (sign_[i] < 0 && (a.e[i] & 1)) sgn = -sgn;
    }
    return {sgn, out};
}

int SignedPerm::detSign() const {
    int sgn = 1;
    for (int i = 0; i < n_; ++i) {
        if (sign_[i] < 0) sgn = -sgn;
        for (int j = i + 1; j < n_; ++j)
            if (perm_[i] > perm_[j]) sgn = -sgn;
    }
    return sgn;
}

uint64_t SignedPerm::key() const {
    // Digit (perm-1)*2 + (sign<0) in base 2n, most significant digit first,
    // so key order matches lexicographic order on the window notation.
    uint64_t k = n_;
    for (int i = 0; i < n_; ++i)
        k = k * uint64_t(2 * n_) + uint64_t((perm_[i] - 1) * 2 + (sign_[i] < 0));
    return k;
}

std::string SignedPerm::str() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        if (i) s += ",";
        if (sign_[i] < 0) s += "-";
        s += std::to_string(int(perm_[i]));
    }
    return s + "]";
}

SignedPerm transposition(int n, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw ArgumentError("bad transposition indices");
    SignedPerm w(n);
    w.setImage(i, j, 1);
    w.setImage(j, i, 1);
    return w;
}

SignedPerm barTransposition(int n, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw ArgumentError("bad transposition indices");
    SignedPerm w(n);
    w.setImage(i, j, -1);
    w.setImage(j, i, -1);
    return w;
}

SignedPerm signFlip(int n, int i) {
    if (i < 1 || i > n) throw ArgumentError("bad sign-flip index");
    SignedPerm w(n);
    w.setImage(i, i, -1);
    return w;
}

int numGenerators(const WeylType& t) {
    return t.family == Family::A ? t.n - 1 : t.n;
}

SignedPerm simpleReflection(const WeylType& t, int k) {
    if (k < 1 || k > numGenerators(t))
        throw ArgumentError("generator index out of range for " + t.str());
    if (k <= t.n - 1) return transposition(t.n, k, k + 1);
    // k == n: s_n is tau_n for B, sbar_{n-1,n} for D.
    if (t.family == Family::B) return signFlip(t.n, t.n);
    return barTransposition(t.n, t.n - 1, t.n);
}

SignedPerm reflection(const WeylType& t, ReflectionKind kind, int i, int j) {
    switch (kind) {
        case ReflectionKind::SIMPLE:
            return simpleReflection(t, i);
        case ReflectionKind::SIJ:
            return transposition(t.n, i, j);
        case ReflectionKind::SBAR_IJ:
            if (t.family == Family::A)
                throw ArgumentError("sbar_ij not available in type A");
            return barTransposition(t.n, i, j);
        case ReflectionKind::TAU_I:
            if (t.family != Family::B)
                throw ArgumentError("tau_i only available in type B");
            return signFlip(t.n, i);
    }
    throw ArgumentError("bad reflection kind");
}

bool memberOf(const WeylType& t, const SignedPerm& w) {
    if (w.rank() != t.n) return false;
    int negs = 0;
    for (int i = 1; i <= t.n; ++i)
        if (w.act(i).second < 0) ++negs;
    switch (t.family) {
        case Family::A: return negs == 0;
        case Family::B: return true;
        case Family::D: return negs % 2 == 0;
    }
    return false;
}

int coxeterM(const WeylType& t, int i, int j) {
    int m = numGenerators(t);
    if (i < 1 || j < 1 || i > m || j > m) throw ArgumentError("bad generator index");
    if (i == j) return 1;
    if (i > j) std::swap(i, j);
    switch (t.family) {
        case Family::A:
            return j == i + 1 ? 3 : 2;
        case Family::B:
            if (j == i + 1) return j == t.n ? 4 : 3;
            return 2;
        case Family::D:
            if (j < t.n) return j == i + 1 ? 3 : 2;
            return i == t.n - 2 ? 3 : 2;  // node n attaches to node n-2
    }
    return 2;
}

WeylGroup::WeylGroup(const WeylType& t) : type_(t) {
    int m = numGenerators(t);
    for (int k = 1; k <= m; ++k) gens_.push_back(simpleReflection(t, k));

    SignedPerm id(t.n);
    dist_.emplace(id.key(), 0);
    elements_.push_back(id);
    std::deque<SignedPerm> queue{id};
    while (!queue.empty()) {
        SignedPerm w = queue.front();
        queue.pop_front();
        uint16_t d = dist_.at(w.key());
        for (const auto& g : gens_) {
            SignedPerm next = g.compose(w);
            if (dist_.emplace(next.key(), uint16_t(d + 1)).second) {
                elements_.push_back(next);
                queue.push_back(next);
            }
        }
    }
}

const WeylGroup& WeylGroup::get(const WeylType& t, bool allowSmallD) {
    validateType(t, allowSmallD);
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<WeylGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto keyOf = std::make_pair(int(t.family), t.n);
    auto it = cache.find(keyOf);
    if (it == cache.end())
        it = cache.emplace(keyOf, std::unique_ptr<WeylGroup>(new WeylGroup(t))).first;
    return *it->second;
}

const SignedPerm& WeylGroup::simple(int k) const {
    if (k < 1 || k > int(gens_.size()))
        throw ArgumentError("generator index out of range for " + type_.str());
    return gens_[k - 1];
}

bool WeylGroup::contains(const SignedPerm& w) const {
    return w.rank() == type_.n && dist_.count(w.key()) != 0;
}

int WeylGroup::length(const SignedPerm& w) const {
    auto it = dist_.find(w.key());
    if (w.rank() != type_.n || it == dist_.end())
        throw ArgumentError("element is not a member of " + type_.str());
    return it->second;
}

std::vector<int> WeylGroup::reducedWord(const SignedPerm& w) const {
    // Greedy descent: w = s_g * w' with the least g shortening w gives the
    // lexicographically least reduced word.
    int len = length(w);
    std::vector<int> word;
    word.reserve(len);
    SignedPerm cur = w;
    while (len > 0) {
        for (int g = 1;; ++g) {
            if (g > numGens()) throw InternalError("no descent found in reducedWord");
            SignedPerm next = gens_[g - 1].compose(cur);
            auto it = dist_.find(next.key());
            if (it != dist_.end() && it->second == len - 1) {
                word.push_back(g);
                cur = next;
                len = it->second;
                break;
            }
        }
    }
    return word;
}

SignedPerm WeylGroup::wordToElement(const std::vector<int>& word) const {
    SignedPerm w(type_.n);
    for (int g : word) w = w.compose(simple(g));
    return w;
}

}  // namespace heckec
