#include "epikit/rootgalois.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace epikit {

std::int64_t dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DomainError("dimension mismatch in pairing");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RootDatum RootDatum::type_a(int n) {
    if (n < 2) throw DomainError("type A needs n >= 2");
    RootDatum d;
    d.rank_ = n;
    d.type_a_n_ = n;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            IntVec v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(i)] = 1;
            v[static_cast<std::size_t>(j)] = -1;
            d.roots_.push_back(v);
            d.coroots_.push_back(v);
            d.positive_.push_back(i < j);
        }
    }
    d.validate();
    return d;
}

RootDatum RootDatum::from_lists(int rank, std::vector<IntVec> roots, std::vector<IntVec> coroots,
                                std::vector<bool> positive) {
    if (roots.size() != coroots.size() || roots.size() != positive.size()) {
        throw DomainError("root, coroot and positivity lists differ in length");
    }
    RootDatum d;
    d.rank_ = rank;
    d.roots_ = std::move(roots);
    d.coroots_ = std::move(coroots);
    d.positive_ = std::move(positive);
    d.validate();
    return d;
}

void RootDatum::validate() {
    index_.clear();
    for (int i = 0; i < size(); ++i) {
        if (static_cast<int>(root(i).size()) != rank_ || static_cast<int>(coroot(i).size()) != rank_) {
            throw DomainError("root vector has the wrong dimension");
        }
        if (!index_.emplace(root(i), i).second) throw DomainError("repeated root");
    }
    neg_.assign(static_cast<std::size_t>(size()), -1);
    for (int i = 0; i < size(); ++i) {
        if (dot(root(i), coroot(i)) != 2) throw DomainError("<alpha, alpha^vee> != 2");
        IntVec m = root(i);
        for (auto& x : m) x = -x;
        auto j = index_of(m);
        if (!j) throw DomainError("root set not closed under negation");
        IntVec mc = coroot(i);
        for (auto& x : mc) x = -x;
        if (coroot(*j) != mc) throw DomainError("coroot set not compatible with negation");
        if (positive(i) == positive(*j)) throw DomainError("positive system must contain exactly one of +-alpha");
        neg_[static_cast<std::size_t>(i)] = *j;
        for (int k = 0; k < size(); ++k) {
            IntVec r = root(k);
            std::int64_t c = dot(root(k), coroot(i));
            for (int t = 0; t < rank_; ++t) r[static_cast<std::size_t>(t)] -= c * root(i)[static_cast<std::size_t>(t)];
            if (!index_of(r)) throw DomainError("reflection does not permute roots");
        }
    }
}

std::optional<int> RootDatum::index_of(const IntVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int RootDatum::pair_index(int i, int j) const {
    if (!is_type_a()) throw DomainError("pair_index needs a type A datum");
    int n = type_a_n_;
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw DomainError("invalid root pair");
    return i * (n - 1) + (j < i ? j : j - 1);
}

std::pair<int, int> RootDatum::pair_of(int r) const {
    if (!is_type_a()) throw DomainError("pair_of needs a type A datum");
    int n = type_a_n_;
    int i = r / (n - 1);
    int j = r % (n - 1);
    return {i, j < i ? j : j + 1};
}

IntVec RootDatum::two_rho() const {
    IntVec s(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < size(); ++i) {
        if (!positive(i)) continue;
        for (int t = 0; t < rank_; ++t) s[static_cast<std::size_t>(t)] += root(i)[static_cast<std::size_t>(t)];
    }
    return s;
}

int RootDatum::least_root(const std::vector<int>& idx) const {
    if (idx.empty()) throw DomainError("empty root set");
    int best = idx.front();
    for (int r : idx) {
        if (root(r) < root(best)) best = r;
    }
    return best;
}

IntMatrix permutation_matrix(const std::vector<int>& pi) {
    int n = static_cast<int>(pi.size());
    IntMatrix m(n, n);
    for (int j = 0; j < n; ++j) m(pi[static_cast<std::size_t>(j)], j) = 1;
    return m;
}

GaloisRootAction::GaloisRootAction(RootDatum datum, std::vector<IntMatrix> gamma_gens,
                                   std::vector<IntMatrix> inertia_gens, std::optional<int> frobenius_gen,
                                   bool regular_elliptic)
    : datum_(std::move(datum)), regular_elliptic_(regular_elliptic) {
    int r = datum_.rank();
    for (auto& g : gamma_gens) {
        if (g.rows() != r || g.cols() != r) throw DomainError("generator has the wrong size");
        if (std::llabs(g.det()) != 1) throw DomainError("generator is not invertible over the integers");
        root_permutation(g);
    }
    // closure
    std::set<IntMatrix> seen;
    std::deque<IntMatrix> todo;
    IntMatrix id = IntMatrix::identity(r);
    seen.insert(id);
    todo.push_back(id);
    while (!todo.empty()) {
        IntMatrix x = todo.front();
        todo.pop_front();
        for (auto& g : gamma_gens) {
            IntMatrix y = g * x;
            if (seen.insert(y).second) {
                if (seen.size() > 100000) throw DomainError("group generated is too large");
                todo.push_back(y);
            }
        }
    }
    elements_.assign(seen.begin(), seen.end());
    for (int i = 0; i < order(); ++i) {
        lookup_[elements_[static_cast<std::size_t>(i)]] = i;
        perms_.push_back(root_permutation(elements_[static_cast<std::size_t>(i)]));
    }
    identity_ = find(id);
    for (auto& g : gamma_gens) gen_idx_.push_back(find(g));
    if (frobenius_gen) {
        if (*frobenius_gen < 0 || *frobenius_gen >= static_cast<int>(gamma_gens.size())) {
            throw DomainError("Frobenius generator index out of range");
        }
        frob_ = gen_idx_[static_cast<std::size_t>(*frobenius_gen)];
    }
    // inertia subgroup
    inertia_.assign(elements_.size(), false);
    std::vector<int> inert{identity_};
    inertia_[static_cast<std::size_t>(identity_)] = true;
    for (std::size_t k = 0; k < inert.size(); ++k) {
        for (auto& h : inertia_gens) {
            int hi = find(h);
            if (hi < 0) throw DomainError("inertia generator is not in the group");
            int y = multiply(hi, inert[k]);
            if (!inertia_[static_cast<std::size_t>(y)]) {
                inertia_[static_cast<std::size_t>(y)] = true;
                inert.push_back(y);
            }
        }
    }
    for (int g : gen_idx_) {
        for (int h : inert) {
            if (!in_inertia(multiply(multiply(g, h), inverse(g)))) throw DomainError("inertia subgroup is not normal");
        }
    }
    if (regular_elliptic_ && datum_.is_type_a()) check_type_a_regular(inertia_gens);
    classify();
}

std::vector<int> GaloisRootAction::root_permutation(const IntMatrix& m) const {
    std::vector<int> p(static_cast<std::size_t>(datum_.size()));
    IntMatrix minv_t = m.inverse_unimodular().transpose();
    for (int i = 0; i < datum_.size(); ++i) {
        auto j = datum_.index_of(m * datum_.root(i));
        if (!j) throw DomainError("generator matrix does not permute the roots");
        if (minv_t * datum_.coroot(i) != datum_.coroot(*j)) {
            throw DomainError("generator does not carry coroots to coroots");
        }
        p[static_cast<std::size_t>(i)] = *j;
    }
    return p;
}

void GaloisRootAction::check_type_a_regular(const std::vector<IntMatrix>& inertia_gens) const {
    int n = datum_.type_a_n();
    // I must be cyclic, generated by +-(n-cycle) on roots.
    std::set<std::vector<int>> iperms;
    for (int g = 0; g < order(); ++g) {
        if (in_inertia(g)) iperms.insert(perms_[static_cast<std::size_t>(g)]);
    }
    auto cycle_of = [&](const std::vector<int>& rp, int sign) -> std::optional<std::vector<int>> {
        std::vector<int> pi(static_cast<std::size_t>(n), -1);
        for (int r = 0; r < datum_.size(); ++r) {
            int src = datum_.pair_of(r).first;
            auto [a, b] = datum_.pair_of(rp[static_cast<std::size_t>(r)]);
            int img = sign > 0 ? a : b;
            if (pi[static_cast<std::size_t>(src)] == -1) {
                pi[static_cast<std::size_t>(src)] = img;
            } else if (pi[static_cast<std::size_t>(src)] != img) {
                return std::nullopt;
            }
        }
        return pi;
    };
    bool ok = false;
    for (auto& h : inertia_gens) {
        const auto& rp = perms_[static_cast<std::size_t>(find(h))];
        for (int sign : {1, -1}) {
            auto pi = cycle_of(rp, sign);
            if (!pi) continue;
            int len = 1;
            for (int x = (*pi)[0]; x != 0 && len <= n; x = (*pi)[static_cast<std::size_t>(x)]) ++len;
            std::set<std::vector<int>> powers;
            std::vector<int> cur(rp.size());
            std::iota(cur.begin(), cur.end(), 0);
            do {
                powers.insert(cur);
                cur = compose(rp, cur);
            } while (powers.count(cur) == 0);
            if (len == n && powers == iperms) ok = true;
        }
    }
    if (!ok) throw DomainError("inertia is not generated by a regular elliptic element of type A");
}

int GaloisRootAction::find(const IntMatrix& m) const {
    auto it = lookup_.find(m);
    return it == lookup_.end() ? -1 : it->second;
}

int GaloisRootAction::multiply(int g, int h) const {
    int r = find(element(g) * element(h));
    if (r < 0) throw ConsistencyError("group is not closed under multiplication");
    return r;
}

int GaloisRootAction::inverse(int g) const {
    int r = find(element(g).inverse_unimodular());
    if (r < 0) throw ConsistencyError("group is not closed under inversion");
    return r;
}

void GaloisRootAction::classify() {
    int nr = datum_.size();
    orbit_of_.assign(static_cast<std::size_t>(nr), -1);
    for (int r = 0; r < nr; ++r) {
        if (orbit_of_[static_cast<std::size_t>(r)] >= 0) continue;
        std::set<int> orb;
        for (int g = 0; g < order(); ++g) orb.insert(act(g, r));
        RootOrbit o;
        o.members.assign(orb.begin(), orb.end());
        o.representative = datum_.least_root(o.members);
        o.symmetric = orb.count(datum_.negative(r)) > 0;
        o.index = o.symmetric ? 2 : 1;
        // inertia sub-orbits: all stable under -1 or none
        int stable = 0, total = 0;
        std::set<int> done;
        for (int b : o.members) {
            if (done.count(b)) continue;
            std::set<int> iorb;
            for (int g = 0; g < order(); ++g) {
                if (in_inertia(g)) iorb.insert(act(g, b));
            }
            done.insert(iorb.begin(), iorb.end());
            ++total;
            if (iorb.count(datum_.negative(b))) ++stable;
        }
        if (stable != 0 && stable != total) {
            throw ConsistencyError("inertia orbits in a Galois orbit disagree on symmetry");
        }
        o.inertially_symmetric = stable > 0;
        for (int b : o.members) orbit_of_[static_cast<std::size_t>(b)] = static_cast<int>(orbits_.size());
        orbits_.push_back(std::move(o));
    }
    std::sort(orbits_.begin(), orbits_.end(), [&](const RootOrbit& a, const RootOrbit& b) {
        return datum_.root(a.representative) < datum_.root(b.representative);
    });
    for (std::size_t k = 0; k < orbits_.size(); ++k) {
        for (int b : orbits_[k].members) orbit_of_[static_cast<std::size_t>(b)] = static_cast<int>(k);
    }
}

bool GaloisRootAction::is_elliptic() const {
    for (int r = 0; r < datum_.size(); ++r) {
        IntVec s(static_cast<std::size_t>(datum_.rank()), 0);
        for (int g = 0; g < order(); ++g) {
            const IntVec& v = datum_.root(act(g, r));
            for (std::size_t t = 0; t < s.size(); ++t) s[t] += v[t];
        }
        for (auto x : s) {
            if (x != 0) return false;
        }
    }
    return true;
}

std::vector<int> GaloisRootAction::stabilizer(int root) const {
    std::vector<int> out;
    for (int g = 0; g < order(); ++g) {
        if (act(g, root) == root) out.push_back(g);
    }
    return out;
}

std::vector<int> GaloisRootAction::pm_stabilizer(int root) const {
    std::vector<int> out;
    int neg = datum_.negative(root);
    for (int g = 0; g < order(); ++g) {
        int x = act(g, root);
        if (x == root || x == neg) out.push_back(g);
    }
    return out;
}

const std::vector<RootOrbit>& classify_orbits(const GaloisRootAction& action) { return action.orbits(); }

GaloisRootAction coxeter_action(int n, bool sign_extension) {
    std::vector<int> cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
    IntMatrix c = permutation_matrix(cyc);
    std::vector<IntMatrix> gens{c};
    if (sign_extension) {
        IntMatrix m = IntMatrix::identity(n);
        for (int i = 0; i < n; ++i) m(i, i) = -1;
        gens.push_back(m);
    }
    return GaloisRootAction(RootDatum::type_a(n), gens, {c}, std::nullopt, true);
}

Gauge Gauge::positive(const RootDatum& d) {
    Gauge g;
    for (int i = 0; i < d.size(); ++i) g.v_.push_back(d.positive(i) ? 1 : -1);
    return g;
}

Gauge Gauge::from_values(const RootDatum& d, std::vector<int> values) {
    if (static_cast<int>(values.size()) != d.size()) throw DomainError("gauge has the wrong length");
    for (int i = 0; i < d.size(); ++i) {
        int v = values[static_cast<std::size_t>(i)];
        if (v != 1 && v != -1) throw DomainError("gauge values must be +-1");
        if (values[static_cast<std::size_t>(d.negative(i))] != -v) throw DomainError("gauge must satisfy p(-a) = -p(a)");
    }
    Gauge g;
    g.v_ = std::move(values);
    return g;
}

Gauge Gauge::flipped(const RootDatum& d, int root) const {
    Gauge g = *this;
    g.v_[static_cast<std::size_t>(root)] = -g.v_[static_cast<std::size_t>(root)];
    g.v_[static_cast<std::size_t>(d.negative(root))] = -g.v_[static_cast<std::size_t>(d.negative(root))];
    return g;
}

std::vector<int> gauge_path(const RootDatum& d, const Gauge& p, const Gauge& target) {
    std::vector<int> path;
    Gauge cur = p;
    for (int r = 0; r < d.size(); ++r) {
        if (!d.positive(r)) continue;
        if (cur(r) != target(r)) {
            cur = cur.flipped(d, r);
            std::vector<int> v;
            for (int i = 0; i < d.size(); ++i) v.push_back(cur(i));
            Gauge::from_values(d, v);  // each step must stay a gauge
            path.push_back(r);
        }
    }
    if (!(cur == target)) throw ConsistencyError("gauge path does not reach its target");
    return path;
}

TorusMonomialElement::TorusMonomialElement(std::vector<int> perm, std::vector<RootOfUnity> diag)
    : perm_(std::move(perm)), diag_(std::move(diag)) {
    if (perm_.size() != diag_.size()) throw DomainError("permutation and diagonal differ in size");
    std::vector<bool> hit(perm_.size(), false);
    for (int x : perm_) {
        if (x < 0 || x >= size() || hit[static_cast<std::size_t>(x)]) throw DomainError("malformed permutation");
        hit[static_cast<std::size_t>(x)] = true;
    }
}

TorusMonomialElement TorusMonomialElement::identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return {p, std::vector<RootOfUnity>(static_cast<std::size_t>(n))};
}

TorusMonomialElement TorusMonomialElement::permutation(std::vector<int> perm) {
    std::size_t n = perm.size();
    return {std::move(perm), std::vector<RootOfUnity>(n)};
}

TorusMonomialElement TorusMonomialElement::diagonal(std::vector<RootOfUnity> diag) {
    std::vector<int> p(diag.size());
    std::iota(p.begin(), p.end(), 0);
    return {p, std::move(diag)};
}

TorusMonomialElement TorusMonomialElement::operator*(const TorusMonomialElement& o) const {
    if (size() != o.size()) throw DomainError("monomial elements of different sizes");
    std::vector<RootOfUnity> d(diag_);
    // sigma(d')_i = d'_{sigma^{-1}(i)}
    for (int j = 0; j < size(); ++j) d[static_cast<std::size_t>(perm_[static_cast<std::size_t>(j)])] *= o.diag_[static_cast<std::size_t>(j)];
    return {compose(perm_, o.perm_), d};
}

TorusMonomialElement TorusMonomialElement::inverse() const {
    std::vector<RootOfUnity> e(diag_.size());
    for (int j = 0; j < size(); ++j) e[static_cast<std::size_t>(j)] = diag_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(j)])].inverse();
    return {invert(perm_), e};
}

bool TorusMonomialElement::operator<(const TorusMonomialElement& o) const {
    if (perm_ != o.perm_) return perm_ < o.perm_;
    for (std::size_t i = 0; i < diag_.size(); ++i) {
        const auto& a = diag_[i];
        const auto& b = o.diag_[i];
        if (a.order() != b.order()) return a.order() < b.order();
        if (a.exponent() != b.exponent()) return a.exponent() < b.exponent();
    }
    return false;
}

bool TorusMonomialElement::is_diagonal() const {
    for (int j = 0; j < size(); ++j) {
        if (perm_[static_cast<std::size_t>(j)] != j) return false;
    }
    return true;
}

std::vector<int> TorusMonomialElement::signs() const {
    std::vector<int> s;
    for (auto& z : diag_) s.push_back(z.as_sign());
    return s;
}

std::string TorusMonomialElement::to_string() const {
    std::ostringstream os;
    os << "perm(";
    for (int j = 0; j < size(); ++j) os << (j ? " " : "") << perm_[static_cast<std::size_t>(j)];
    os << ") diag(";
    for (int j = 0; j < size(); ++j) os << (j ? ", " : "") << diag_[static_cast<std::size_t>(j)];
    os << ")";
    return os.str();
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) r[j] = a[static_cast<std::size_t>(b[j])];
    return r;
}

std::vector<int> invert(const std::vector<int>& a) {
    std::vector<int> r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[static_cast<std::size_t>(a[j])] = static_cast<int>(j);
    return r;
}

int inversion_count(const std::vector<int>& perm) {
    int c = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++c;
        }
    }
    return c;
}

namespace {

std::vector<int> simple_perm(int i, int n) {
    if (i < 1 || i >= n) throw DomainError("simple reflection index out of range");
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
    return p;
}

TorusMonomialElement simple_lift(int i, int n) {
    // the block [[0,1],[-1,0]] on coordinates (i-1, i)
    std::vector<int> p = simple_perm(i, n);
    std::vector<RootOfUnity> d(static_cast<std::size_t>(n));
    d[static_cast<std::size_t>(i)] = RootOfUnity::sign(-1);
    return {p, d};
}

void check_perm(const std::vector<int>& perm) {
    std::vector<bool> hit(perm.size(), false);
    for (int x : perm) {
        if (x < 0 || x >= static_cast<int>(perm.size()) || hit[static_cast<std::size_t>(x)]) {
            throw DomainError("malformed permutation");
        }
        hit[static_cast<std::size_t>(x)] = true;
    }
}

void reduced_words_rec(std::vector<int> w, std::vector<int>& suffix, std::vector<std::vector<int>>& out) {
    bool id = true;
    for (std::size_t a = 0; a + 1 < w.size(); ++a) {
        if (w[a] > w[a + 1]) {
            id = false;
            std::swap(w[a], w[a + 1]);
            suffix.push_back(static_cast<int>(a) + 1);
            reduced_words_rec(w, suffix, out);
            suffix.pop_back();
            std::swap(w[a], w[a + 1]);
        }
    }
    if (id) out.emplace_back(suffix.rbegin(), suffix.rend());
}

}  // namespace

std::vector<int> permutation_of_word(const std::vector<int>& word, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i : word) p = compose(p, simple_perm(i, n));
    return p;
}

std::vector<int> canonical_reduced_word(const std::vector<int>& perm) {
    check_perm(perm);
    std::vector<int> w = perm, rev;
    while (true) {
        std::size_t a = 0;
        while (a + 1 < w.size() && w[a] < w[a + 1]) ++a;
        if (a + 1 >= w.size()) break;
        std::swap(w[a], w[a + 1]);  // w <- w s_{a+1}
        rev.push_back(static_cast<int>(a) + 1);
    }
    return {rev.rbegin(), rev.rend()};
}

std::vector<std::vector<int>> all_reduced_words(const std::vector<int>& perm) {
    check_perm(perm);
    std::vector<std::vector<int>> out;
    std::vector<int> suffix;
    reduced_words_rec(perm, suffix, out);
    return out;
}

TorusMonomialElement springer_lift(const std::vector<int>& word, int n) {
    TorusMonomialElement x = TorusMonomialElement::identity(n);
    for (int i : word) x = x * simple_lift(i, n);
    if (inversion_count(x.perm()) != static_cast<int>(word.size())) throw DomainError("word is not reduced");
    return x;
}

TorusMonomialElement springer_lift(const std::vector<int>& perm) {
    return springer_lift(canonical_reduced_word(perm), static_cast<int>(perm.size()));
}

std::vector<int> strip_defect(const std::vector<int>& perm) {
    check_perm(perm);
    TorusMonomialElement d = TorusMonomialElement::permutation(perm) * springer_lift(perm).inverse();
    if (!d.is_diagonal()) throw ConsistencyError("strip defect is not diagonal");
    return d.signs();
}

std::vector<int> strip_defect_closed(const std::vector<int>& perm) {
    check_perm(perm);
    int n = static_cast<int>(perm.size());
    std::vector<int> inv = invert(perm);
    std::vector<int> out(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // alpha = e_i - e_j, y_alpha(-1) is -1 at coordinate j
            if (inv[static_cast<std::size_t>(i)] > inv[static_cast<std::size_t>(j)]) out[static_cast<std::size_t>(j)] = -out[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

std::int64_t coweight_pairing(const RootDatum& d, int root, const Coweight& lambda) {
    if (static_cast<int>(lambda.size()) != d.rank()) throw DomainError("coweight has the wrong dimension");
    Rational s = 0;
    const IntVec& a = d.root(root);
    for (int t = 0; t < d.rank(); ++t) s += Rational(a[static_cast<std::size_t>(t)]) * lambda[static_cast<std::size_t>(t)];
    if (s.denominator() != 1) throw DomainError("coweight is not in the coweight lattice");
    return s.numerator();
}

bool in_coweight_lattice(const RootDatum& d, const Coweight& lambda) {
    if (static_cast<int>(lambda.size()) != d.rank()) throw DomainError("coweight has the wrong dimension");
    try {
        for (int r = 0; r < d.size(); ++r) coweight_pairing(d, r, lambda);
    } catch (const DomainError&) {
        return false;
    }
    return true;
}

std::int64_t two_rho_pairing(const RootDatum& d, const Coweight& lambda) {
    std::int64_t s = 0;
    for (int r = 0; r < d.size(); ++r) {
        std::int64_t v = coweight_pairing(d, r, lambda);
        if (d.positive(r)) s += v;
    }
    return s;
}

}  // namespace epikit
