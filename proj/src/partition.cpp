#include "gammanoise/partition.hpp"

#include <algorithm>
#include <string>

namespace gammanoise {

Partition::Partition(std::vector<double> edges) : edges_(std::move(edges)) {
    if (edges_.size() < 2)
        throw std::invalid_argument("partition: at least one cell required");
    if (edges_.front() != 0.0)
        throw std::invalid_argument("partition: first edge must be 0");
    for (std::size_t k = 0; k + 1 < edges_.size(); ++k)
        if (!(edges_[k] < edges_[k + 1]))
            throw std::invalid_argument("partition: edges must be strictly increasing (cell " +
                                        std::to_string(k) + ")");
}

Partition Partition::uniform(double total_length, std::size_t cells) {
    if (!(total_length > 0.0) || cells == 0)
        throw std::invalid_argument("partition: positive length and cell count required");
    std::vector<double> edges(cells + 1);
    for (std::size_t k = 0; k <= cells; ++k)
        edges[k] = total_length * static_cast<double>(k) / static_cast<double>(cells);
    edges[0] = 0.0;
    edges[cells] = total_length;
    return Partition(std::move(edges));
}

std::optional<std::size_t> Partition::cell_containing(double t) const {
    if (t < 0.0 || t >= edges_.back()) return std::nullopt;
    auto it = std::upper_bound(edges_.begin(), edges_.end(), t);
    return static_cast<std::size_t>(it - edges_.begin()) - 1;
}

double Partition::overlap(std::size_t k, double t) const {
    const double lo = edge(k), hi = edge(k + 1);
    return std::clamp(t, lo, hi) - lo;
}

Partition Partition::refined(std::size_t pieces) const {
    if (pieces == 0) throw std::invalid_argument("partition: refinement factor must be positive");
    std::vector<double> edges;
    edges.reserve(size() * pieces + 1);
    for (std::size_t k = 0; k < size(); ++k) {
        const double lo = edges_[k], len = length(k);
        for (std::size_t i = 0; i < pieces; ++i)
            edges.push_back(lo + len * static_cast<double>(i) / static_cast<double>(pieces));
    }
    edges.push_back(edges_.back());
    edges[0] = 0.0;
    return Partition(std::move(edges));
}

}  // namespace gammanoise
