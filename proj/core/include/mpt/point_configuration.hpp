#pragma once

#include <string>
#include <vector>

#include "mpt/exact.hpp"

namespace mpt {

// A labelled configuration of integer points in Z^dim. The order of the
// points is the reference order of the ground set E = {0, ..., n-1};
// label[i] names element i (defaults to "e1", ..., "en").
class PointConfiguration {
public:
    PointConfiguration(std::string name,
                       int dim,
                       std::vector<std::vector<long long>> points,
                       std::vector<std::string> labels = {});

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<std::vector<long long>>& points() const { return points_; }
    const std::vector<std::string>& labels() const { return labels_; }

    int index_of_label(const std::string& label) const; // -1 if absent

    // n x (dim+1) matrix whose row i is (points[i], 1): the homogenized
    // vector configuration whose oriented matroid we study.
    IntMatrix lifted_matrix() const;

private:
    std::string name_;
    int dim_ = 0;
    std::vector<std::vector<long long>> points_;
    std::vector<std::string> labels_;
};

} // namespace mpt
