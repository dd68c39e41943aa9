#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace dengue::moea {

/// Objective pair (f1, f2), minimized.
using ObjectiveVector = std::array<double, 2>;

struct Solution {
    std::vector<double> x;
    ObjectiveVector f{};
    std::size_t eval_id = 0;
};

/// A box-constrained biobjective problem on [0,1]^dim.
struct Problem {
    std::size_t dim = 0;
    std::function<ObjectiveVector(std::span<const double>)> objective;
};

/// Staircase of mutually nondominated 2-D points, keyed by f1 ascending
/// (f2 strictly descending). Supports O(log n) insertion and dominance
/// queries; used for union-of-all-evaluations hypervolume tracking.
class Pareto2dArchive {
public:
    /// True if some archived point weakly dominates p.
    bool weakly_dominated(const ObjectiveVector& p) const
    {
        auto it = points_.upper_bound(p[0]);
        if (it == points_.begin()) {
            return false;
        }
        --it;  // greatest f1 <= p.f1
        return it->second <= p[1];
    }

    void insert(const ObjectiveVector& p)
    {
        if (weakly_dominated(p)) {
            return;
        }
        // remove points the new one dominates (f1 >= p.f1 with f2 >= p.f2)
        auto it = points_.lower_bound(p[0]);
        while (it != points_.end() && it->second >= p[1]) {
            it = points_.erase(it);
        }
        points_.emplace(p[0], p[1]);
    }

    std::size_t size() const { return points_.size(); }

    std::vector<ObjectiveVector> points() const
    {
        std::vector<ObjectiveVector> out;
        out.reserve(points_.size());
        for (const auto& [f1, f2] : points_) {
            out.push_back({f1, f2});
        }
        return out;
    }

    /// Exact area dominated by the staircase and bounded by ref.
    double hypervolume(const ObjectiveVector& ref) const
    {
        double hv = 0.0;
        double prev_f2 = ref[1];
        for (const auto& [f1, f2] : points_) {
            if (f1 >= ref[0] || f2 >= prev_f2) {
                continue;
            }
            hv += (ref[0] - f1) * (prev_f2 - f2);
            prev_f2 = f2;
        }
        return hv;
    }

private:
    std::map<double, double> points_;
};

/// Wraps a Problem with evaluation accounting and a union front of every
/// point ever evaluated. Every call to evaluate() costs exactly one unit.
class Evaluator {
public:
    Evaluator(const Problem& problem, std::size_t max_evals)
        : problem_(&problem), max_evals_(max_evals)
    {
        if (!problem.objective || problem.dim == 0) {
            throw std::invalid_argument("Evaluator: problem has no objective or zero dim");
        }
    }

    ObjectiveVector evaluate(std::span<const double> x)
    {
        const ObjectiveVector f = problem_->objective(x);
        ++used_;
        union_front_.insert(f);
        return f;
    }

    std::size_t used() const { return used_; }
    std::size_t budget() const { return max_evals_; }
    bool exhausted() const { return used_ >= max_evals_; }
    std::size_t remaining() const { return exhausted() ? 0 : max_evals_ - used_; }
    std::size_t dim() const { return problem_->dim; }
    const Pareto2dArchive& union_front() const { return union_front_; }

private:
    const Problem* problem_;
    std::size_t max_evals_;
    std::size_t used_ = 0;
    Pareto2dArchive union_front_;
};

/// Per-generation progress row shared by all runners.
struct GenerationLogRow {
    std::size_t gen;
    std::size_t fun_eval;
    std::size_t pop_size;
    std::size_t n_leaders;
    double hv;
};

/// Optional per-generation log; hv is measured on the union of all
/// evaluated points against a fixed reference, so it never decreases.
struct GenerationLog {
    ObjectiveVector ref{3.0, 80.0};
    std::vector<GenerationLogRow> rows;

    void record(std::size_t gen, const Evaluator& ev, std::size_t pop_size,
                std::size_t n_leaders)
    {
        rows.push_back({gen, ev.used(), pop_size, n_leaders,
                        ev.union_front().hypervolume(ref)});
    }
};

}  // namespace dengue::moea
