#include "illumcover/covering.hpp"

#include "axis_detail.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace illumcover {

namespace {

int popcount_words(const std::vector<std::uint64_t>& w) {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
}

// Minimum set cover over torus-grid cubes. The search exploits grid
// translation invariance twice: all cyclic-lattice unions are tried as
// incumbents first, and the branch-and-bound may assume the cover contains
// the cube based at the origin. Branching follows the first uncovered
// element; the a_n(eps) recurrence acts as a global optimality target.
class SetCoverSolver {
  public:
    SetCoverSolver(std::vector<std::vector<std::uint32_t>> set_elems, std::size_t n_elements,
                   long long target_lb, long long budget)
        : set_elems_(std::move(set_elems)),
          n_elements_(n_elements),
          words_((n_elements + 63) / 64),
          target_lb_(target_lb),
          budget_(budget) {
        elem_sets_.resize(n_elements_);
        for (std::uint32_t s = 0; s < set_elems_.size(); ++s)
            for (auto e : set_elems_[s]) elem_sets_[e].push_back(s);
        for (const auto& cov : elem_sets_)
            if (cov.empty()) throw Infeasible("no candidate cube covers some arrangement cell");
        coverage_.assign(set_elems_.size(), std::vector<std::uint64_t>(words_, 0));
        max_set_size_ = 1;
        for (std::uint32_t s = 0; s < set_elems_.size(); ++s) {
            for (auto e : set_elems_[s]) coverage_[s][e / 64] |= 1ULL << (e % 64);
            max_set_size_ = std::max(max_set_size_, set_elems_[s].size());
        }
        full_.assign(words_, ~0ULL);
        if (n_elements_ % 64) full_[words_ - 1] = (1ULL << (n_elements_ % 64)) - 1;
    }

    // ids of the distinct grid translates k*v for the cyclic seeding
    void set_orbits(std::vector<std::vector<std::uint32_t>> orbits) { orbits_ = std::move(orbits); }

    std::pair<std::vector<std::uint32_t>, bool> solve(long long* nodes_out) {
        best_size_ = std::numeric_limits<int>::max();
        seed_lattices();
        if (!done()) seed_greedy();
        if (!done()) {
            covered_.assign(words_, 0);
            uncovered_ = static_cast<int>(n_elements_);
            chosen_.clear();
            // some minimum cover contains the origin cube (translate any
            // cover by minus one of its bases)
            choose(0);
            recurse(0);
            unchoose(0);
        }
        *nodes_out = nodes_;
        if (budget_hit_ && static_cast<long long>(best_size_) > target_lb_)
            throw BudgetExceeded("set-cover search exceeded node budget with minimality unproven");
        return {best_, true};
    }

  private:
    bool done() const {
        return best_size_ != std::numeric_limits<int>::max() &&
               static_cast<long long>(best_size_) <= target_lb_;
    }

    int gain(std::uint32_t s) const {
        int g = 0;
        for (std::size_t w = 0; w < words_; ++w)
            g += __builtin_popcountll(coverage_[s][w] & ~covered_[w]);
        return g;
    }

    void choose(std::uint32_t s) {
        undo_.emplace_back(covered_);
        for (std::size_t w = 0; w < words_; ++w) covered_[w] |= coverage_[s][w];
        uncovered_ = static_cast<int>(n_elements_) - popcount_words(covered_);
        chosen_.push_back(s);
    }

    void unchoose(std::uint32_t) {
        covered_ = std::move(undo_.back());
        undo_.pop_back();
        uncovered_ = static_cast<int>(n_elements_) - popcount_words(covered_);
        chosen_.pop_back();
    }

    void record_if_better() {
        if (static_cast<int>(chosen_.size()) < best_size_) {
            best_ = chosen_;
            best_size_ = static_cast<int>(chosen_.size());
        }
    }

    void seed_lattices() {
        for (const auto& orbit : orbits_) {
            std::vector<std::uint64_t> acc(words_, 0);
            for (auto s : orbit)
                for (std::size_t w = 0; w < words_; ++w) acc[w] |= coverage_[s][w];
            if (acc == full_ && static_cast<int>(orbit.size()) < best_size_) {
                best_.assign(orbit.begin(), orbit.end());
                best_size_ = static_cast<int>(orbit.size());
                if (done()) return;
            }
        }
    }

    void seed_greedy() {
        covered_.assign(words_, 0);
        uncovered_ = static_cast<int>(n_elements_);
        chosen_.clear();
        while (uncovered_ > 0 && static_cast<int>(chosen_.size()) + 1 < best_size_) {
            std::uint32_t pick = 0;
            int pick_gain = 0;
            for (std::uint32_t s = 0; s < set_elems_.size(); ++s) {
                int g = gain(s);
                if (g > pick_gain) {
                    pick_gain = g;
                    pick = s;
                }
            }
            if (pick_gain == 0) break;
            choose(pick);
        }
        if (uncovered_ == 0) record_if_better();
        while (!chosen_.empty()) unchoose(chosen_.back());
    }

    std::uint32_t first_uncovered(std::uint32_t from) const {
        std::size_t w = from / 64;
        std::uint64_t mask = ~covered_[w] & full_[w] & (~0ULL << (from % 64));
        while (!mask) {
            ++w;
            mask = ~covered_[w] & full_[w];
        }
        return static_cast<std::uint32_t>(w * 64 + __builtin_ctzll(mask));
    }

    void recurse(std::uint32_t scan_from) {
        if (done() || budget_hit_) return;
        if (++nodes_ > budget_) {
            budget_hit_ = true;
            return;
        }
        if (uncovered_ == 0) {
            record_if_better();
            return;
        }
        const int allowed = best_size_ - 1 - static_cast<int>(chosen_.size());
        long long lb = (uncovered_ + max_set_size_ - 1) / max_set_size_;
        if (lb > allowed) return;

        std::uint32_t elem = first_uncovered(scan_from);

        if (allowed == 1) {
            // the one remaining cube must cover everything still uncovered
            for (auto s : elem_sets_[elem]) {
                bool covers_all = true;
                for (std::size_t w = 0; w < words_ && covers_all; ++w)
                    covers_all = (~covered_[w] & full_[w] & ~coverage_[s][w]) == 0;
                if (covers_all) {
                    choose(s);
                    record_if_better();
                    unchoose(s);
                    if (done()) return;
                }
            }
            return;
        }

        std::vector<std::pair<int, std::uint32_t>> order;
        order.reserve(elem_sets_[elem].size());
        for (auto s : elem_sets_[elem]) order.emplace_back(gain(s), s);
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        for (const auto& [g, s] : order) {
            choose(s);
            recurse(elem + 1);
            unchoose(s);
            if (done() || budget_hit_) return;
        }
    }

    std::vector<std::vector<std::uint32_t>> set_elems_;
    std::vector<std::vector<std::uint32_t>> elem_sets_;
    std::vector<std::vector<std::uint64_t>> coverage_;
    std::vector<std::vector<std::uint32_t>> orbits_;
    std::size_t n_elements_;
    std::size_t words_;
    long long target_lb_;
    long long budget_;
    std::size_t max_set_size_;

    std::vector<std::uint64_t> covered_, full_;
    std::vector<std::vector<std::uint64_t>> undo_;
    std::vector<std::uint32_t> chosen_;
    int uncovered_ = 0;
    std::vector<std::uint32_t> best_;
    int best_size_ = std::numeric_limits<int>::max();
    long long nodes_ = 0;
    bool budget_hit_ = false;
};

void check_guards(int n, int q) {
    if (n < 1) throw DomainError("search_minimal_cover: n must be >= 1");
    if (q < 1) throw DomainError("search_minimal_cover: grid resolution must be >= 1");
    double total = std::pow(double(q), n);
    if (total > 1e6) throw DomainError("search_minimal_cover: q^n exceeds the 10^6 guard");
}

// Enumerates grid bases (i_1..i_n)/q and their covered arrangement cells.
template <typename SampleT, typename InsideFn>
std::vector<std::vector<std::uint32_t>> build_sets(int n, int q,
                                                   const std::vector<std::vector<SampleT>>& samples,
                                                   InsideFn inside, std::size_t* n_elements) {
    std::vector<std::size_t> stride(n, 1);
    for (int j = n - 2; j >= 0; --j) stride[j] = stride[j + 1] * samples[j + 1].size();
    *n_elements = stride[0] * samples[0].size();
    if (*n_elements > (std::size_t(1) << 24))
        throw DomainError("search_minimal_cover: arrangement grid too large");

    std::vector<std::vector<std::vector<std::uint32_t>>> axis_cover(n);
    for (int j = 0; j < n; ++j) {
        axis_cover[j].resize(q);
        for (int i = 0; i < q; ++i)
            for (std::uint32_t s = 0; s < samples[j].size(); ++s)
                if (inside(i, j, samples[j][s])) axis_cover[j][i].push_back(s);
    }

    long long ncubes = 1;
    for (int j = 0; j < n; ++j) ncubes *= q;
    std::vector<std::vector<std::uint32_t>> sets(ncubes);
    std::vector<int> base(n, 0);
    for (long long c = 0; c < ncubes; ++c) {
        long long rem = c;
        for (int j = n - 1; j >= 0; --j) {
            base[j] = static_cast<int>(rem % q);
            rem /= q;
        }
        std::vector<std::uint32_t> partial = {0};
        bool empty = false;
        for (int j = 0; j < n && !empty; ++j) {
            const auto& cov = axis_cover[j][base[j]];
            if (cov.empty()) {
                empty = true;
                break;
            }
            std::vector<std::uint32_t> next;
            next.reserve(partial.size() * cov.size());
            for (auto p : partial)
                for (auto s : cov) next.push_back(p + s * static_cast<std::uint32_t>(stride[j]));
            partial.swap(next);
        }
        if (!empty) {
            std::sort(partial.begin(), partial.end());
            sets[c] = std::move(partial);
        }
    }
    return sets;
}

// every distinct cyclic orbit {k*v : k} in the base grid, as candidate ids
std::vector<std::vector<std::uint32_t>> grid_orbits(int n, int q) {
    long long ncubes = 1;
    for (int j = 0; j < n; ++j) ncubes *= q;
    std::vector<std::vector<std::uint32_t>> orbits;
    if (ncubes > 20000) return orbits;  // seeding only; skip on huge grids
    std::vector<int> v(n), p(n);
    for (long long c = 1; c < ncubes; ++c) {
        long long rem = c;
        for (int j = n - 1; j >= 0; --j) {
            v[j] = static_cast<int>(rem % q);
            rem /= q;
        }
        std::fill(p.begin(), p.end(), 0);
        std::vector<std::uint32_t> orbit;
        do {
            std::uint32_t id = 0;
            for (int j = 0; j < n; ++j) id = id * q + p[j];
            orbit.push_back(id);
            for (int j = 0; j < n; ++j) p[j] = (p[j] + v[j]) % q;
        } while (std::any_of(p.begin(), p.end(), [](int x) { return x != 0; }));
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end());
    orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return orbits;
}

template <typename SampleT>
SearchResult assemble_result(int n, int q, SetCoverSolver& solver) = delete;

}  // namespace

SearchResult search_minimal_cover(int n, const Rat& eps, int q, long long node_budget) {
    check_guards(n, q);
    if (!(eps > 0 && eps < 1)) throw DomainError("search_minimal_cover: eps must lie in (0,1)");

    std::vector<std::vector<Rat>> samples(n);
    {
        std::vector<Rat> endpoints;
        for (int i = 0; i < q; ++i) {
            endpoints.push_back(Rat(i, q));
            endpoints.push_back(detail::wrap1(Rat(i, q) + eps));
        }
        std::vector<Rat> axis = detail::arrangement_samples(std::move(endpoints));
        for (int j = 0; j < n; ++j) samples[j] = axis;
    }

    std::size_t n_elements = 0;
    auto sets = build_sets<Rat>(
        n, q, samples,
        [&](int i, int, const Rat& s) {
            Rat d = detail::wrap1(s - Rat(i, q));
            return d > 0 && d < eps;
        },
        &n_elements);

    long long target = lower_bound_recurrence(n, eps).convert_to<long long>();
    SetCoverSolver solver(std::move(sets), n_elements, target, node_budget);
    solver.set_orbits(grid_orbits(n, q));
    SearchResult res;
    auto [picked, proven] = solver.solve(&res.nodes);
    res.proven_minimal = proven;

    res.cover.dim = n;
    res.cover.mode = Mode::Exact;
    res.cover.side = eps;
    res.cover.side_f = eps.convert_to<double>();
    for (auto c : picked) {
        std::vector<UnitRat> coords(n);
        long long rem = c;
        for (int j = n - 1; j >= 0; --j) {
            coords[j] = UnitRat::wrap(Rat(rem % q, q));
            rem /= q;
        }
        res.cover.bases.emplace_back(std::move(coords));
    }
    std::sort(res.cover.bases.begin(), res.cover.bases.end(),
              [](const TorusPoint& a, const TorusPoint& b) {
                  for (int j = 0; j < a.dim(); ++j) {
                      if (a.coords[j].value != b.coords[j].value)
                          return a.coords[j].value < b.coords[j].value;
                  }
                  return false;
              });
    return res;
}

SearchResult search_minimal_cover_f(int n, double eps, int q, double margin, long long node_budget) {
    check_guards(n, q);
    if (!(eps > 0 && eps < 1)) throw DomainError("search_minimal_cover_f: eps must lie in (0,1)");

    std::vector<std::vector<double>> samples(n);
    {
        std::vector<double> endpoints;
        for (int i = 0; i < q; ++i) {
            endpoints.push_back(double(i) / q);
            endpoints.push_back(detail::wrap1f(double(i) / q + eps));
        }
        std::vector<double> axis = detail::arrangement_samples_f(std::move(endpoints), margin);
        for (int j = 0; j < n; ++j) samples[j] = axis;
    }

    std::size_t n_elements = 0;
    // Borderline cells count as not covered, so any cover found here is
    // covering with certainty at the configured margin.
    auto sets = build_sets<double>(
        n, q, samples,
        [&](int i, int, double s) {
            double d = detail::wrap1f(s - double(i) / q);
            return d > margin && d < eps - margin && d < 1.0 - margin;
        },
        &n_elements);

    long long target = lower_bound_recurrence_f(n, eps).convert_to<long long>();
    SetCoverSolver solver(std::move(sets), n_elements, target, node_budget);
    solver.set_orbits(grid_orbits(n, q));
    SearchResult res;
    auto [picked, proven] = solver.solve(&res.nodes);
    res.proven_minimal = proven;

    res.cover.dim = n;
    res.cover.mode = Mode::Float;
    res.cover.side_f = eps;
    res.cover.margin = margin;
    for (auto c : picked) {
        std::vector<double> coords(n);
        long long rem = c;
        for (int j = n - 1; j >= 0; --j) {
            coords[j] = double(rem % q) / q;
            rem /= q;
        }
        res.cover.bases_f.push_back(std::move(coords));
    }
    std::sort(res.cover.bases_f.begin(), res.cover.bases_f.end());
    return res;
}

}  // namespace illumcover
