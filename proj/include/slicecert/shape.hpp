#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace slicecert {

/// Position of a variable in a d-dimensional array, 1-based in each
/// coordinate: x[2,1,3] has coord = {2,1,3}.
struct VarIndex {
    std::vector<int> coord;

    VarIndex() = default;
    VarIndex(std::initializer_list<int> c) : coord(c) {}
    explicit VarIndex(std::vector<int> c) : coord(std::move(c)) {}

    int dims() const { return static_cast<int>(coord.size()); }
    bool operator==(const VarIndex& o) const { return coord == o.coord; }
    bool operator<(const VarIndex& o) const { return coord < o.coord; }
    std::string str() const;  // "x[2,1,3]"
};

/// Extents (n_1, ..., n_d) of the variable array, d >= 2 and every n_i >= 2.
/// Cheap to copy; equality is extent-wise.
class Shape {
public:
    explicit Shape(std::vector<int> extents);
    Shape(std::initializer_list<int> extents) : Shape(std::vector<int>(extents)) {}

    /// Parses the "2x3x2" literal form.
    static Shape parse(const std::string& text);

    int dims() const { return static_cast<int>(extents().size()); }
    int extent(int i) const { return extents()[i]; }  // 0-based direction
    const std::vector<int>& extents() const { return *data_; }
    int var_count() const { return var_count_; }

    /// Rank of a variable in the fixed ordering: lexicographic on index
    /// tuples, smaller tuple first. x[1,...,1] has id 0 and ranks highest.
    int var_id(const VarIndex& v) const;
    VarIndex var_of(int id) const;

    /// Applies fn to every index tuple, in id (lexicographic) order.
    void for_each_index(const std::function<void(const VarIndex&)>& fn) const;

    std::string str() const;  // "2x3x2"

    bool operator==(const Shape& o) const { return *data_ == *o.data_; }
    bool operator!=(const Shape& o) const { return !(*this == o); }

private:
    std::shared_ptr<const std::vector<int>> data_;
    int var_count_ = 0;
};

}  // namespace slicecert
