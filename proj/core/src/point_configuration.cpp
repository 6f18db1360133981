#include "mpt/point_configuration.hpp"

#include <set>

namespace mpt {

PointConfiguration::PointConfiguration(std::string name,
                                       int dim,
                                       std::vector<std::vector<long long>> points,
                                       std::vector<std::string> labels)
    : name_(std::move(name)), dim_(dim), points_(std::move(points)), labels_(std::move(labels)) {
    if (dim_ < 1) throw validation_error("point configuration: dim must be >= 1");
    if (points_.empty()) throw validation_error("point configuration: no points");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (static_cast<int>(points_[i].size()) != dim_)
            throw validation_error("point " + std::to_string(i + 1) + " has " +
                                   std::to_string(points_[i].size()) + " coordinates, expected " +
                                   std::to_string(dim_));
    }
    std::set<std::vector<long long>> distinct(points_.begin(), points_.end());
    if (distinct.size() != points_.size())
        throw validation_error("point configuration: duplicate points");

    if (labels_.empty()) {
        labels_.reserve(points_.size());
        for (std::size_t i = 0; i < points_.size(); ++i)
            labels_.push_back("e" + std::to_string(i + 1));
    }
    if (labels_.size() != points_.size())
        throw validation_error("label count (" + std::to_string(labels_.size()) +
                               ") does not match point count (" + std::to_string(points_.size()) + ")");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
        throw validation_error("point configuration: duplicate labels");
}

int PointConfiguration::index_of_label(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

IntMatrix PointConfiguration::lifted_matrix() const {
    IntMatrix m(points_.size(), dim_ + 1);
    for (std::size_t i = 0; i < points_.size(); ++i) {
        for (int j = 0; j < dim_; ++j) m(i, j) = points_[i][j];
        m(i, dim_) = 1;
    }
    return m;
}

} // namespace mpt
