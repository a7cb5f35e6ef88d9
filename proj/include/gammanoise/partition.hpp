#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gammanoise {

/// Ordered contiguous half-open cells [u_k, u_{k+1}) covering [0, T].
/// Every cell has strictly positive length; edges are strictly increasing
/// and start at 0.
class Partition {
public:
    explicit Partition(std::vector<double> edges);

    /// d equal cells over [0, total_length].
    static Partition uniform(double total_length, std::size_t cells);

    std::size_t size() const { return edges_.size() - 1; }
    double edge(std::size_t k) const { return edges_.at(k); }
    double length(std::size_t k) const { return edges_.at(k + 1) - edges_.at(k); }
    double total_length() const { return edges_.back(); }
    const std::vector<double>& edges() const { return edges_; }

    /// Index k with t in [u_k, u_{k+1}); nullopt outside [0, T).
    std::optional<std::size_t> cell_containing(double t) const;

    /// Length of cell k intersected with [0, t], in [0, length(k)].
    double overlap(std::size_t k, double t) const;

    /// Same span with each cell split into `pieces` equal parts.
    Partition refined(std::size_t pieces) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<double> edges_;
};

/// A function constant on each partition cell and zero outside [0, T).
/// Real-valued step functions act as test functions for sampling and
/// S-transforms; complex values appear in characteristic-functional
/// evaluation only.
template <class T>
class BasicStepFunction {
public:
    BasicStepFunction(Partition partition, std::vector<T> values)
        : partition_(std::move(partition)), values_(std::move(values)) {
        if (values_.size() != partition_.size())
            throw std::invalid_argument("step function: one value per cell required");
    }

    static BasicStepFunction zero(Partition partition) {
        std::vector<T> v(partition.size(), T{});
        return BasicStepFunction(std::move(partition), std::move(v));
    }

    /// scale * indicator of cell k.
    static BasicStepFunction indicator(Partition partition, std::size_t cell, T scale = T{1}) {
        std::vector<T> v(partition.size(), T{});
        v.at(cell) = scale;
        return BasicStepFunction(std::move(partition), std::move(v));
    }

    const Partition& partition() const { return partition_; }
    std::span<const T> values() const { return values_; }
    T value(std::size_t k) const { return values_.at(k); }
    std::size_t size() const { return values_.size(); }

    /// Pointwise value; 0 outside the partition span.
    T at(double t) const {
        auto k = partition_.cell_containing(t);
        return k ? values_[*k] : T{};
    }

    /// Refinement with repeated values; represents the same function.
    BasicStepFunction refined(std::size_t pieces) const {
        std::vector<T> v;
        v.reserve(values_.size() * pieces);
        for (const T& x : values_)
            for (std::size_t i = 0; i < pieces; ++i) v.push_back(x);
        return BasicStepFunction(partition_.refined(pieces), std::move(v));
    }

private:
    Partition partition_;
    std::vector<T> values_;
};

using StepFunction = BasicStepFunction<double>;
using ComplexStepFunction = BasicStepFunction<std::complex<double>>;

inline ComplexStepFunction complexify(const StepFunction& f) {
    std::vector<std::complex<double>> v(f.values().begin(), f.values().end());
    return ComplexStepFunction(f.partition(), std::move(v));
}

}  // namespace gammanoise
