#include "hall/bruteforce.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <sstream>
#include <unordered_set>

namespace hall {

const char* kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::SL2: return "SL2";
        case GroupKind::PSL2: return "PSL2";
        case GroupKind::GL2: return "GL2";
        case GroupKind::PGL2: return "PGL2";
        case GroupKind::Sym: return "Sym";
        case GroupKind::Alt: return "Alt";
    }
    return "?";
}

std::optional<GroupKind> kind_from_name(const std::string& s) {
    for (GroupKind k : {GroupKind::SL2, GroupKind::PSL2, GroupKind::GL2, GroupKind::PGL2, GroupKind::Sym, GroupKind::Alt})
        if (s == kind_name(k)) return k;
    return std::nullopt;
}

namespace {

bool matrix_kind(GroupKind k) { return k != GroupKind::Sym && k != GroupKind::Alt; }

struct Mat {
    unsigned a, b, c, d;
};

Elem pack(const Mat& m) { return Elem(m.a) << 24 | Elem(m.b) << 16 | Elem(m.c) << 8 | Elem(m.d); }
Mat unpack(Elem e) { return {unsigned(e >> 24 & 0xff), unsigned(e >> 16 & 0xff), unsigned(e >> 8 & 0xff), unsigned(e & 0xff)}; }

Elem scale(Elem e, unsigned l, unsigned p) {
    Mat m = unpack(e);
    return pack({m.a * l % p, m.b * l % p, m.c * l % p, m.d * l % p});
}

// Least representative modulo the allowed scalars.
Elem canonical(GroupKind k, Elem e, unsigned p) {
    if (k == GroupKind::PSL2) return std::min(e, scale(e, p - 1, p));
    if (k == GroupKind::PGL2) {
        Elem best = e;
        for (unsigned l = 2; l < p; ++l) best = std::min(best, scale(e, l, p));
        return best;
    }
    return e;
}

unsigned primitive_root(unsigned p) {
    for (unsigned g = 2; g < p; ++g) {
        unsigned x = 1, k = 0;
        do {
            x = x * g % p;
            ++k;
        } while (x != 1);
        if (k == p - 1) return g;
    }
    return 1;
}

Elem perm_pack(const std::vector<unsigned>& img) {
    Elem e = 0;
    for (std::size_t i = 0; i < img.size(); ++i) e |= Elem(img[i]) << (8 * i);
    return e;
}

unsigned perm_at(Elem e, unsigned i) { return unsigned(e >> (8 * i) & 0xff); }

int perm_sign(Elem e, unsigned n) {
    std::vector<bool> seen(n, false);
    int s = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        for (unsigned j = i; !seen[j]; j = perm_at(e, j)) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

constexpr std::size_t kTableLimit = 5100;

// Reusable marks for closures.
struct Marks {
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;

    void reset(std::size_t n) {
        if (stamp.size() != n) {
            stamp.assign(n, 0);
            epoch = 0;
        }
        if (++epoch == 0) {
            std::fill(stamp.begin(), stamp.end(), 0);
            epoch = 1;
        }
    }
    bool test(Idx x) const { return stamp[x] == epoch; }
    bool set(Idx x) {
        if (stamp[x] == epoch) return false;
        stamp[x] = epoch;
        return true;
    }
};

struct VecHash {
    std::size_t operator()(const std::vector<Idx>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (Idx x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return std::size_t(h);
    }
};

// Closure of gens; nullopt when it exceeds limit elements or meets an element outside allowed.
std::optional<std::vector<Idx>> closure(const ConcreteGroup& g, const std::vector<Idx>& gens, std::size_t limit,
                                        const std::vector<char>* allowed, Marks& marks) {
    marks.reset(g.order());
    std::vector<Idx> out{g.identity()};
    marks.set(g.identity());
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (Idx s : gens) {
            Idx y = g.mul(out[i], s);
            if (!marks.set(y)) continue;
            if (allowed && !(*allowed)[y]) return std::nullopt;
            out.push_back(y);
            if (out.size() > limit) return std::nullopt;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Idx> conj_set(const ConcreteGroup& g, const std::vector<Idx>& s, Idx by) {
    std::vector<Idx> r;
    r.reserve(s.size());
    for (Idx x : s) r.push_back(g.conj(x, by));
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<std::vector<Idx>> orbit(const ConcreteGroup& g, const std::vector<Idx>& s) {
    std::vector<std::vector<Idx>> out{s};
    std::unordered_set<std::vector<Idx>, VecHash> seen{s};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (Idx gen : g.generators()) {
            auto c = conj_set(g, out[i], gen);
            if (seen.insert(c).second) out.push_back(std::move(c));
        }
    return out;
}

// Drop generators that are not needed.
std::vector<Idx> prune(const ConcreteGroup& g, std::vector<Idx> gens, std::size_t size, Marks& marks) {
    for (std::size_t i = gens.size(); i-- > 0;) {
        std::vector<Idx> rest = gens;
        rest.erase(rest.begin() + long(i));
        auto c = closure(g, rest, size, nullptr, marks);
        if (c && c->size() == size) gens = std::move(rest);
    }
    return gens;
}

}  // namespace

std::string ConcreteGroup::name() const {
    switch (kind_) {
        case GroupKind::SL2: return "SL(2," + std::to_string(param_) + ")";
        case GroupKind::PSL2: return "PSL(2," + std::to_string(param_) + ")";
        case GroupKind::GL2: return "GL(2," + std::to_string(param_) + ")";
        case GroupKind::PGL2: return "PGL(2," + std::to_string(param_) + ")";
        case GroupKind::Sym: return "Sym(" + std::to_string(param_) + ")";
        case GroupKind::Alt: return "Alt(" + std::to_string(param_) + ")";
    }
    return "?";
}

std::optional<Idx> ConcreteGroup::index_of(Elem e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Elem ConcreteGroup::raw_mul(Elem x, Elem y) const {
    if (matrix_kind(kind_)) {
        const unsigned p = unsigned(param_);
        Mat a = unpack(x), b = unpack(y);
        Mat r{(a.a * b.a + a.b * b.c) % p, (a.a * b.b + a.b * b.d) % p, (a.c * b.a + a.d * b.c) % p,
              (a.c * b.b + a.d * b.d) % p};
        return canonical(kind_, pack(r), p);
    }
    Elem r = 0;
    for (unsigned i = 0; i < param_; ++i) r |= Elem(perm_at(y, perm_at(x, i))) << (8 * i);
    return r;
}

Idx ConcreteGroup::mul(Idx a, Idx b) const {
    if (!table_.empty()) return table_[std::size_t(a) * elems_.size() + b];
    return index_.at(raw_mul(elems_[a], elems_[b]));
}

Idx ConcreteGroup::conj(Idx x, Idx g) const {
    for (std::size_t j = 0; j < gens_.size(); ++j)
        if (gens_[j] == g) return gen_conj_[j][x];
    return mul(mul(inv_[g], x), g);
}

std::string ConcreteGroup::element_text(Idx i) const {
    std::ostringstream os;
    Elem e = elems_[i];
    if (matrix_kind(kind_)) {
        Mat m = unpack(e);
        os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
    } else {
        os << "[";
        for (unsigned k = 0; k < param_; ++k) os << (k ? "," : "") << perm_at(e, k) + 1;
        os << "]";
    }
    return os.str();
}

void ConcreteGroup::finish() {
    const std::size_t n = elems_.size();
    if (n <= kTableLimit) {
        table_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = std::uint16_t(index_.at(raw_mul(elems_[a], elems_[b])));
    }
    inv_.assign(n, 0);
    ord_.assign(n, 0);
    for (Idx x = 0; x < n; ++x) {
        Idx prev = identity(), y = x;
        unsigned long k = 1;
        while (y != identity()) {
            prev = y;
            y = mul(y, x);
            ++k;
        }
        ord_[x] = k;
        inv_[x] = (x == identity()) ? identity() : prev;
    }
    gen_conj_.assign(gens_.size(), std::vector<Idx>(n));
    for (std::size_t j = 0; j < gens_.size(); ++j)
        for (Idx x = 0; x < n; ++x) gen_conj_[j][x] = mul(mul(inv_[gens_[j]], x), gens_[j]);
}

BigInt expected_order(GroupKind kind, unsigned long param) {
    const BigInt p(param);
    switch (kind) {
        case GroupKind::SL2: return BigInt(p * (p * p - 1));
        case GroupKind::PSL2: return BigInt(p * (p * p - 1) / (param == 2 ? 1 : 2));
        case GroupKind::GL2: return BigInt((p * p - 1) * (p * p - p));
        case GroupKind::PGL2: return BigInt(p * (p * p - 1));
        case GroupKind::Sym: return factorial(param);
        case GroupKind::Alt: return param < 2 ? BigInt(1) : BigInt(factorial(param) / 2);
    }
    return 0;
}

ConcreteGroup build_group(GroupKind kind, unsigned long param, std::size_t max_order) {
    ConcreteGroup g;
    g.kind_ = kind;
    g.param_ = param;
    std::vector<Elem> gens;
    Elem id;
    if (matrix_kind(kind)) {
        if (!is_prime(param)) throw NonPrimeField(std::to_string(param) + " is not a prime; only prime fields are built");
        if (param > 17) throw ArithError("matrix groups are built for p <= 17 only");
        const unsigned p = unsigned(param);
        id = pack({1, 0, 0, 1});
        gens.push_back(pack({1, 1, 0, 1}));
        gens.push_back(pack({0, p - 1, 1, 0}));
        if ((kind == GroupKind::GL2 || kind == GroupKind::PGL2) && p > 2) gens.push_back(pack({primitive_root(p), 0, 0, 1}));
        id = canonical(kind, id, p);
        for (Elem& e : gens) e = canonical(kind, e, p);
    } else {
        if (param < 1 || param > 8) throw ArithError("permutation groups are built for 1 <= n <= 8 only");
        const unsigned n = unsigned(param);
        std::vector<unsigned> img(n);
        std::iota(img.begin(), img.end(), 0u);
        id = perm_pack(img);
        if (kind == GroupKind::Sym && n >= 2) {
            auto t = img;
            std::swap(t[0], t[1]);
            gens.push_back(perm_pack(t));
            std::vector<unsigned> c(n);
            for (unsigned i = 0; i < n; ++i) c[i] = (i + 1) % n;
            if (n > 2) gens.push_back(perm_pack(c));
        }
        if (kind == GroupKind::Alt)
            for (unsigned k = 2; k < n; ++k) {
                auto t = img;
                t[0] = 1, t[1] = k, t[k] = 0;
                gens.push_back(perm_pack(t));
            }
    }

    g.elems_.push_back(id);
    g.index_[id] = 0;
    for (std::size_t i = 0; i < g.elems_.size(); ++i)
        for (Elem s : gens) {
            Elem y = g.raw_mul(g.elems_[i], s);
            if (g.index_.emplace(y, Idx(g.elems_.size())).second) {
                g.elems_.push_back(y);
                if (g.elems_.size() > max_order)
                    throw BudgetExceeded(g.name() + ": order exceeds " + std::to_string(max_order));
            }
        }
    for (Elem s : gens) {
        Idx i = g.index_.at(s);
        if (std::find(g.gens_.begin(), g.gens_.end(), i) == g.gens_.end()) g.gens_.push_back(i);
    }
    if (BigInt(g.elems_.size()) != expected_order(kind, param))
        throw std::logic_error(g.name() + ": closure has " + std::to_string(g.elems_.size()) + " elements");
    if (kind == GroupKind::Alt)
        for (Elem e : g.elems_)
            if (perm_sign(e, unsigned(param)) != 1) throw std::logic_error("Alt generators produced an odd permutation");
    g.finish();
    return g;
}

ConcreteGroup with_generators(const ConcreteGroup& g, const std::vector<Idx>& gens) {
    Marks marks;
    auto c = closure(g, gens, g.order(), nullptr, marks);
    if (!c || c->size() != g.order()) throw ArithError("with_generators: the given elements do not generate the group");
    ConcreteGroup h = g;
    h.gens_ = gens;
    h.gen_conj_.assign(gens.size(), std::vector<Idx>(g.order()));
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (Idx x = 0; x < g.order(); ++x) h.gen_conj_[j][x] = g.mul(g.mul(g.inv(gens[j]), x), gens[j]);
    return h;
}

bool SubgroupHandle::contains(Idx x) const { return std::binary_search(elements.begin(), elements.end(), x); }

SubgroupHandle generate(const ConcreteGroup& g, const std::vector<Idx>& gens) {
    Marks marks;
    return {*closure(g, gens, g.order(), nullptr, marks), gens};
}

bool is_subgroup(const ConcreteGroup& g, const SubgroupHandle& h) {
    if (h.elements.empty() || !std::is_sorted(h.elements.begin(), h.elements.end())) return false;
    if (g.order() % h.order() != 0 || !h.contains(g.identity())) return false;
    for (Idx a : h.elements)
        for (Idx b : h.elements)
            if (!h.contains(g.mul(a, b))) return false;
    return true;
}

std::vector<SubgroupHandle> conjugates(const ConcreteGroup& g, const SubgroupHandle& h) {
    std::vector<SubgroupHandle> out;
    for (auto& s : orbit(g, h.elements)) out.push_back({std::move(s), {}});
    out.front().generators = h.generators;
    return out;
}

CensusReport find_hall_subgroups(const ConcreteGroup& g, const PrimeSet& pi, SearchBudget budget) {
    CensusReport c;
    c.pi = pi;
    c.hall_order = pi_part(BigInt(g.order()), pi);
    const std::size_t hall = c.hall_order.get_ui();
    const std::size_t n = g.order();

    std::vector<char> pi_elem(n);
    for (Idx x = 0; x < n; ++x) pi_elem[x] = is_pi_number(BigInt(g.element_order(x)), pi);

    struct Rep {
        std::vector<Idx> elements;
        std::vector<Idx> gens;
        std::vector<std::vector<Idx>> orbit;  // kept for Hall classes only
    };
    std::vector<Rep> reps;
    std::unordered_set<std::vector<Idx>, VecHash> seen;
    bool truncated = false;
    Marks marks, covered;

    auto add = [&](std::vector<Idx> elems, std::vector<Idx> gens) {
        if (seen.count(elems)) return;
        auto orb = orbit(g, elems);
        for (auto& s : orb) seen.insert(s);
        if (reps.size() >= budget.subgroups) {
            truncated = true;
            return;
        }
        gens = prune(g, std::move(gens), elems.size(), marks);
        Rep r{std::move(elems), std::move(gens), {}};
        if (r.elements.size() == hall) r.orbit = std::move(orb);
        reps.push_back(std::move(r));
    };

    add({g.identity()}, {});
    for (std::size_t i = 0; i < reps.size() && !truncated; ++i) {
        if (reps[i].elements.size() >= hall) continue;
        const std::vector<Idx> H = reps[i].elements;
        const std::vector<Idx> Hgens = reps[i].gens;
        covered.reset(n);
        for (Idx y = 0; y < n && !truncated; ++y) {
            if (!pi_elem[y] || covered.test(y)) continue;
            for (Idx h1 : H) {
                Idx t = g.mul(h1, y);
                for (Idx h2 : H) covered.set(g.mul(t, h2));
            }
            if (++c.closures > budget.closure_steps) {
                truncated = true;
                break;
            }
            std::vector<Idx> gens = Hgens;
            gens.push_back(y);
            auto k = closure(g, gens, hall, &pi_elem, marks);
            if (k) add(std::move(*k), std::move(gens));
        }
    }
    c.exhaustive = !truncated;

    for (const Rep& r : reps) {
        c.lattice.push_back({r.elements, r.gens});
        if (r.elements.size() != hall) continue;
        for (std::size_t j = 0; j < r.orbit.size(); ++j) {
            c.halls_found.push_back({r.orbit[j], j == 0 ? r.gens : std::vector<Idx>{}});
            c.hall_class.push_back(c.class_count);
        }
        ++c.class_count;
    }
    return c;
}

std::vector<std::vector<std::size_t>> conjugacy_class_count(const ConcreteGroup& g,
                                                            const std::vector<SubgroupHandle>& subgroups) {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> placed(subgroups.size(), false);
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        if (placed[i]) continue;
        std::unordered_set<std::vector<Idx>, VecHash> orb;
        for (auto& s : orbit(g, subgroups[i].elements)) orb.insert(std::move(s));
        std::vector<std::size_t> cls;
        for (std::size_t j = i; j < subgroups.size(); ++j)
            if (!placed[j] && orb.count(subgroups[j].elements)) {
                placed[j] = true;
                cls.push_back(j);
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

std::optional<SubgroupHandle> find_dpi_counterexample(const ConcreteGroup&, const PrimeSet&, const CensusReport& census) {
    auto largest_outside = [&](std::size_t cls) {
        std::optional<SubgroupHandle> best;
        for (const SubgroupHandle& k : census.lattice) {
            bool inside = false;
            for (std::size_t j = 0; j < census.halls_found.size() && !inside; ++j) {
                const auto& h = census.halls_found[j].elements;
                inside = census.hall_class[j] == cls && std::includes(h.begin(), h.end(), k.elements.begin(), k.elements.end());
            }
            if (!inside && (!best || k.order() > best->order())) best = k;
        }
        return best;
    };
    if (census.class_count == 0) return largest_outside(0);
    for (std::size_t cls = 0; cls < census.class_count; ++cls)
        if (auto w = largest_outside(cls)) return w;
    return std::nullopt;
}

bool VerificationOutcome::all_pass() const {
    if (!exhaustive) return false;
    return std::all_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return c.pass; });
}

VerificationOutcome verify_report(const ConcreteGroup& g, const HallReport& report, const CensusReport& census) {
    VerificationOutcome out;
    out.exhaustive = census.exhaustive;
    const bool has = census.class_count > 0;
    const std::string e_actual = has ? "yes" : "no";
    out.comparisons.push_back({"e_pi", verdict_name(report.e_pi), e_actual,
                               report.e_pi == Verdict::OutOfScope || verdict_name(report.e_pi) == e_actual});
    out.comparisons.push_back({"group_order", report.group_order.get_str(), std::to_string(g.order()),
                               report.group_order == BigInt(g.order())});
    out.comparisons.push_back({"hall_order", report.pi_order.get_str(), census.hall_order.get_str(),
                               report.pi_order == census.hall_order});
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        const HallClass& hc = report.classes[i];
        out.comparisons.push_back({"classes[" + std::to_string(i) + "].hall_order", hc.hall_order.get_str(),
                                   census.hall_order.get_str(), hc.hall_order == census.hall_order});
    }
    const unsigned long k = census.class_count;
    bool k_ok;
    if (report.k_pi.is_exact())
        k_ok = *report.k_pi.exact == k;
    else
        k_ok = std::find(report.k_pi.bound.begin(), report.k_pi.bound.end(), k) != report.k_pi.bound.end();
    out.comparisons.push_back({"k_pi", report.k_pi.to_string(), std::to_string(k), k_ok});
    return out;
}

VerificationOutcome verify_report(const ConcreteGroup& g, const HallReport& report, SearchBudget budget) {
    return verify_report(g, report, find_hall_subgroups(g, report.pi, budget));
}

std::optional<GroupSpec> spec_of(GroupKind kind, unsigned long param) {
    if (kind == GroupKind::PGL2) return std::nullopt;
    std::string text;
    const std::string p = std::to_string(param);
    switch (kind) {
        case GroupKind::SL2: text = "SL(2," + p + ")"; break;
        case GroupKind::PSL2: text = "PSL(2," + p + ")"; break;
        case GroupKind::GL2: text = "GL(2," + p + ")"; break;
        case GroupKind::Sym: text = "Sym(" + p + ")"; break;
        case GroupKind::Alt: text = "Alt(" + p + ")"; break;
        default: break;
    }
    return parse_group(text);
}

std::pair<GroupKind, unsigned long> parse_concrete(const std::string& text) {
    static const std::regex mat(R"(\s*(PSL|SL|PGL|GL)\s*\(\s*2\s*,\s*(\d+)\s*\)\s*)");
    static const std::regex perm(R"(\s*(Sym|Alt)\s*\(\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, mat)) {
        const std::string k = m[1];
        GroupKind kind = k == "PSL" ? GroupKind::PSL2 : k == "SL" ? GroupKind::SL2 : k == "PGL" ? GroupKind::PGL2 : GroupKind::GL2;
        return {kind, std::stoul(m[2])};
    }
    if (std::regex_match(text, m, perm)) return {m[1] == "Sym" ? GroupKind::Sym : GroupKind::Alt, std::stoul(m[2])};
    throw ParseError("not a brute-force group: '" + text + "'");
}

std::map<unsigned long, std::size_t> order_statistics(const ConcreteGroup& g, const SubgroupHandle& h) {
    std::map<unsigned long, std::size_t> m;
    for (Idx x : h.elements) ++m[g.element_order(x)];
    return m;
}

std::vector<std::size_t> point_orbits(const ConcreteGroup& g, const SubgroupHandle& h) {
    if (matrix_kind(g.kind())) throw ArithError("point_orbits: not a permutation group");
    const unsigned n = unsigned(g.param());
    std::vector<unsigned> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](unsigned x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Idx x : h.elements)
        for (unsigned i = 0; i < n; ++i) parent[find(i)] = find(perm_at(g.element(x), i));
    std::map<unsigned, std::size_t> sizes;
    for (unsigned i = 0; i < n; ++i) ++sizes[find(i)];
    std::vector<std::size_t> out;
    for (auto& [root, s] : sizes) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

Idx project_to_psl2(const ConcreteGroup& sl, const ConcreteGroup& psl, Idx x) {
    if (sl.kind() != GroupKind::SL2 || psl.kind() != GroupKind::PSL2 || sl.param() != psl.param())
        throw ArithError("project_to_psl2: needs SL2(p) and PSL2(p)");
    return *psl.index_of(canonical(GroupKind::PSL2, sl.element(x), unsigned(sl.param())));
}

}  // namespace hall
