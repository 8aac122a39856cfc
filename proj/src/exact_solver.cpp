#include "cogdim/exact_solver.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace cogdim {

namespace {

constexpr signed char kUndet = 0;
constexpr signed char kPresent = 1;
constexpr signed char kAbsent = 2;

// Forbidden induced patterns on 4 vertices, indexed by the 6-bit edge mask
// over pair slots (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
void build_forbidden_table(RepFamily family, bool out[64]) {
    const int slot_u[6] = {0, 0, 0, 1, 1, 2};
    const int slot_v[6] = {1, 2, 3, 2, 3, 3};
    for (int mask = 0; mask < 64; ++mask) {
        int count = 0, deg[4] = {0, 0, 0, 0};
        for (int s = 0; s < 6; ++s)
            if (mask & (1 << s)) {
                ++count;
                ++deg[slot_u[s]];
                ++deg[slot_v[s]];
            }
        int maxdeg = std::max(std::max(deg[0], deg[1]), std::max(deg[2], deg[3]));
        int mindeg = std::min(std::min(deg[0], deg[1]), std::min(deg[2], deg[3]));
        bool p4 = count == 3 && maxdeg == 2 && mindeg == 1;
        bool c4 = count == 4 && maxdeg == 2;
        bool two_k2 = count == 2 && maxdeg == 1;
        out[mask] = family == RepFamily::Cograph ? p4 : (p4 || c4 || two_k2);
    }
}

class Solver {
public:
    Solver(const Graph& g, RepFamily family, int k, const SolveOptions& options)
        : g_(g), family_(family), k_(k), options_(options) {
        if (k < 1) throw Error("bad-factor-count", "factor count must be at least 1");
        if (k > 8) throw Error("bad-factor-count", "factor count above 8 is not supported");
        n_ = g.vertex_count();
        pair_count_ = n_ * (n_ - 1) / 2;
        build_forbidden_table(family, forbidden_);
        full_mask_ = static_cast<unsigned>((1u << k_) - 1);

        pair_id_.assign(static_cast<size_t>(n_) * n_, -1);
        pu_.reserve(pair_count_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                pair_id_[static_cast<size_t>(u) * n_ + v] = static_cast<int>(pu_.size());
                pair_id_[static_cast<size_t>(v) * n_ + u] = static_cast<int>(pu_.size());
                pu_.push_back(u);
                pv_.push_back(v);
            }
        gedge_.assign(pair_count_, 0);
        for (auto [u, v] : g.edges()) gedge_[pid(u, v)] = 1;

        build_subsets();
        build_branch_order();

        state_.assign(static_cast<size_t>(k_) * pair_count_, kUndet);
        present_mask_.assign(pair_count_, 0);
        absent_mask_.assign(pair_count_, 0);
    }

    SolveResult run() {
        SolveResult result;
        if (dfs(0)) {
            result.status = SolveResult::Status::Sat;
            result.representation = materialize();
            VerifyResult check = verify_representation(g_, result.representation);
            if (!check.accepted) throw std::logic_error("solver produced an unverifiable representation");
        } else if (limit_hit_) {
            result.status = SolveResult::Status::Undecided;
        } else {
            result.status = SolveResult::Status::Unsat;
        }
        result.nodes = nodes_;
        return result;
    }

private:
    int pid(int u, int v) const { return pair_id_[static_cast<size_t>(u) * n_ + v]; }

    // For every pair, the 4-subsets containing it: 6 pair ids each in the
    // fixed slot order of the sorted subset.
    void build_subsets() {
        sub_begin_.assign(pair_count_ + 1, 0);
        if (n_ < 4) return;
        int per_pair = (n_ - 2) * (n_ - 3) / 2;
        sub_pairs_.reserve(static_cast<size_t>(pair_count_) * per_pair * 6);
        for (int p = 0; p < pair_count_; ++p) {
            sub_begin_[p] = static_cast<int>(sub_pairs_.size());
            int u = pu_[p], v = pv_[p];
            for (int x = 0; x < n_; ++x) {
                if (x == u || x == v) continue;
                for (int y = x + 1; y < n_; ++y) {
                    if (y == u || y == v) continue;
                    int vs[4] = {u, v, x, y};
                    std::sort(vs, vs + 4);
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j) sub_pairs_.push_back(pid(vs[i], vs[j]));
                }
            }
        }
        sub_begin_[pair_count_] = static_cast<int>(sub_pairs_.size());
    }

    // Non-edges sorted by descending incidence with G-edges over 4-subsets
    // (equivalently deg(u)+deg(v) weighted), ties by pair id.
    void build_branch_order() {
        std::vector<long long> score(pair_count_, 0);
        long long m = g_.edge_count();
        for (int p = 0; p < pair_count_; ++p) {
            if (gedge_[p]) continue;
            long long inc = g_.degree(pu_[p]) + g_.degree(pv_[p]);
            score[p] = inc * std::max(0, n_ - 3) + (m - inc);
            branch_order_.push_back(p);
        }
        std::stable_sort(branch_order_.begin(), branch_order_.end(),
                         [&](int a, int b) { return score[a] > score[b]; });
    }

    bool set_cell(int p, int f, signed char val) {
        signed char& cell = state_[static_cast<size_t>(f) * pair_count_ + p];
        if (cell != kUndet) return cell == val;
        cell = val;
        trail_.emplace_back(p, f);
        if (val == kPresent) {
            present_mask_[p] |= 1u << f;
            if (present_mask_[p] == full_mask_) return false;  // non-edge present in every factor
            if (options_.inference && absent_mask_[p] == 0 &&
                __builtin_popcount(present_mask_[p]) == k_ - 1) {
                int remaining = __builtin_ctz(full_mask_ & ~present_mask_[p]);
                pending_.emplace_back(p, remaining);
            }
        } else {
            absent_mask_[p] |= 1u << f;
        }
        scan_queue_.emplace_back(p, f);
        return true;
    }

    bool scan(int p, int f) {
        const signed char* fstate = state_.data() + static_cast<size_t>(f) * pair_count_;
        const int* ids = sub_pairs_.data() + sub_begin_[p];
        const int* end = sub_pairs_.data() + sub_begin_[p + 1];
        for (; ids != end; ids += 6) {
            unsigned mask = 0;
            int undet_count = 0, undet_slot = -1;
            for (int s = 0; s < 6; ++s) {
                int q = ids[s];
                signed char st = gedge_[q] ? kPresent : fstate[q];
                if (st == kPresent)
                    mask |= 1u << s;
                else if (st == kUndet) {
                    ++undet_count;
                    undet_slot = s;
                    if (undet_count > 1) break;
                }
            }
            if (undet_count == 0) {
                if (forbidden_[mask]) return false;
            } else if (undet_count == 1 && options_.inference) {
                bool bad_present = forbidden_[mask | (1u << undet_slot)];
                bool bad_absent = forbidden_[mask];
                if (bad_present && bad_absent) return false;
                if (bad_present || bad_absent) {
                    if (!set_cell(ids[undet_slot], f, bad_present ? kAbsent : kPresent)) return false;
                }
            }
        }
        return true;
    }

    bool propagate() {
        while (scan_head_ < scan_queue_.size() || pending_head_ < pending_.size()) {
            while (pending_head_ < pending_.size()) {
                auto [p, f] = pending_[pending_head_++];
                if (!set_cell(p, f, kAbsent)) return false;
            }
            if (scan_head_ < scan_queue_.size()) {
                auto [p, f] = scan_queue_[scan_head_++];
                if (!scan(p, f)) return false;
            }
        }
        return true;
    }

    bool dfs(int depth) {
        int branch_pair = -1;
        for (int p : branch_order_)
            if ((present_mask_[p] | absent_mask_[p]) != full_mask_) {
                branch_pair = p;
                break;
            }
        if (branch_pair < 0) return true;  // fully determined, conflict-free

        // candidate absence subsets in canonical order: cardinality, then value;
        // the first branch of the whole search is restricted to prefix subsets
        // (factor indices are interchangeable)
        std::vector<unsigned> candidates;
        if (depth == 0) {
            for (unsigned s = 1; s <= full_mask_; s = (s << 1) | 1u) candidates.push_back(s);
        } else {
            unsigned required = absent_mask_[branch_pair];
            unsigned banned = present_mask_[branch_pair];
            for (unsigned s = 1; s <= full_mask_; ++s)
                if ((s & banned) == 0 && (s & required) == required) candidates.push_back(s);
            std::stable_sort(candidates.begin(), candidates.end(), [](unsigned a, unsigned b) {
                int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
                return ca != cb ? ca < cb : a < b;
            });
        }

        for (unsigned s : candidates) {
            ++nodes_;
            if (options_.node_limit && nodes_ > options_.node_limit) {
                limit_hit_ = true;
                return false;
            }
            size_t trail_mark = trail_.size();
            size_t scan_mark = scan_queue_.size();
            size_t pending_mark = pending_.size();
            bool ok = true;
            for (int f = 0; f < k_ && ok; ++f)
                ok = set_cell(branch_pair, f, (s >> f) & 1u ? kAbsent : kPresent);
            if (ok) ok = propagate();
            if (ok && dfs(depth + 1)) return true;
            if (limit_hit_) return false;
            while (trail_.size() > trail_mark) {
                auto [p, f] = trail_.back();
                trail_.pop_back();
                signed char& cell = state_[static_cast<size_t>(f) * pair_count_ + p];
                if (cell == kPresent)
                    present_mask_[p] &= ~(1u << f);
                else
                    absent_mask_[p] &= ~(1u << f);
                cell = kUndet;
            }
            scan_queue_.resize(scan_mark);
            scan_head_ = scan_mark;
            pending_.resize(pending_mark);
            pending_head_ = pending_mark;
        }
        return false;
    }

    Representation materialize() const {
        Representation rep;
        rep.family = family_;
        rep.n = n_;
        for (int f = 0; f < k_; ++f) {
            Graph factor(n_);
            for (int p = 0; p < pair_count_; ++p)
                if (gedge_[p] || state_[static_cast<size_t>(f) * pair_count_ + p] == kPresent)
                    factor.add_edge(pu_[p], pv_[p]);
            rep.factors.push_back(std::move(factor));
        }
        return rep;
    }

    const Graph& g_;
    RepFamily family_;
    int k_;
    SolveOptions options_;
    int n_ = 0;
    int pair_count_ = 0;
    unsigned full_mask_ = 0;
    bool forbidden_[64] = {};
    std::vector<int> pair_id_, pu_, pv_;
    std::vector<char> gedge_;
    std::vector<int> sub_pairs_, sub_begin_;
    std::vector<int> branch_order_;
    std::vector<signed char> state_;
    std::vector<unsigned> present_mask_, absent_mask_;
    std::vector<std::pair<int, int>> trail_, scan_queue_, pending_;
    size_t scan_head_ = 0, pending_head_ = 0;
    unsigned long long nodes_ = 0;
    bool limit_hit_ = false;
};

}  // namespace

SolveResult representable(const Graph& g, RepFamily family, int k, const SolveOptions& options) {
    return Solver(g, family, k, options).run();
}

DimensionResult exact_dimension(const Graph& g, RepFamily family, int kmax, const SolveOptions& options) {
    if (kmax < 1) throw Error("bad-factor-count", "kmax must be at least 1");
    DimensionResult result;
    for (int k = 1; k <= kmax; ++k) {
        SolveResult sr = representable(g, family, k, options);
        result.nodes += sr.nodes;
        if (sr.status == SolveResult::Status::Sat) {
            result.status = DimensionResult::Status::Found;
            result.dimension = k;
            result.witness = std::move(sr.representation);
            return result;
        }
        if (sr.status == SolveResult::Status::Undecided) {
            result.status = DimensionResult::Status::Undecided;
            return result;
        }
    }
    result.status = DimensionResult::Status::AboveBound;
    return result;
}

void export_cnf(std::ostream& out, const Graph& g, RepFamily family, int k) {
    if (k < 1 || k > 8) throw Error("bad-factor-count", "factor count must be in 1..8");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> nonedges;
    std::vector<int> nonedge_index(static_cast<size_t>(n) * n, -1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) {
                nonedge_index[static_cast<size_t>(u) * n + v] = static_cast<int>(nonedges.size());
                nonedges.emplace_back(u, v);
            }
    auto var = [&](int t, int f) { return t * k + f + 1; };

    bool forbidden[64];
    build_forbidden_table(family, forbidden);
    const int slot_u[6] = {0, 0, 0, 1, 1, 2};
    const int slot_v[6] = {1, 2, 3, 2, 3, 3};

    std::set<std::vector<int>> clauses;
    for (size_t t = 0; t < nonedges.size(); ++t) {
        std::vector<int> clause;
        for (int f = 0; f < k; ++f) clause.push_back(-var(static_cast<int>(t), f));
        clauses.insert(clause);
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int vs[4] = {a, b, c, d};
                    unsigned fixed = 0;
                    int slot_nonedge[6];
                    int free_slots = 0;
                    for (int s = 0; s < 6; ++s) {
                        int u = vs[slot_u[s]], v = vs[slot_v[s]];
                        if (g.has_edge(u, v)) {
                            fixed |= 1u << s;
                            slot_nonedge[s] = -1;
                        } else {
                            slot_nonedge[s] = nonedge_index[static_cast<size_t>(u) * n + v];
                            ++free_slots;
                        }
                    }
                    if (free_slots == 0) continue;
                    for (unsigned am = 0; am < (1u << free_slots); ++am) {
                        unsigned mask = fixed;
                        int bit = 0;
                        for (int s = 0; s < 6; ++s)
                            if (slot_nonedge[s] >= 0 && (am >> bit++) & 1u) mask |= 1u << s;
                        if (!forbidden[mask]) continue;
                        for (int f = 0; f < k; ++f) {
                            std::vector<int> clause;
                            int bit2 = 0;
                            for (int s = 0; s < 6; ++s)
                                if (slot_nonedge[s] >= 0) {
                                    bool present = (am >> bit2++) & 1u;
                                    clause.push_back(present ? -var(slot_nonedge[s], f) : var(slot_nonedge[s], f));
                                }
                            std::sort(clause.begin(), clause.end());
                            clauses.insert(clause);
                        }
                    }
                }

    out << "c intersection representation of a graph as " << k << " "
        << family_name(family) << " factors\n";
    out << "c var t*k+f+1 encodes: non-edge t (lex order) present in factor f\n";
    for (size_t t = 0; t < nonedges.size(); ++t)
        for (int f = 0; f < k; ++f)
            out << "c var " << var(static_cast<int>(t), f) << " = non-edge (" << nonedges[t].first
                << "," << nonedges[t].second << ") in factor " << f << "\n";
    out << "p cnf " << nonedges.size() * k << " " << clauses.size() << "\n";
    for (const auto& clause : clauses) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
}

}  // namespace cogdim
