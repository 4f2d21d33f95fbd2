#include "slicecert/shape.hpp"

#include <sstream>
#include <stdexcept>

namespace slicecert {

std::string VarIndex::str() const {
    std::ostringstream os;
    os << "x[";
    for (size_t i = 0; i < coord.size(); ++i) {
        if (i) os << ',';
        os << coord[i];
    }
    os << ']';
    return os.str();
}

Shape::Shape(std::vector<int> extents) {
    if (extents.size() < 2)
        throw std::invalid_argument("Shape: need at least 2 directions");
    long long count = 1;
    for (int n : extents) {
        if (n < 2) throw std::invalid_argument("Shape: every extent must be >= 2");
        count *= n;
        if (count > (1 << 28)) throw std::invalid_argument("Shape: too many variables");
    }
    data_ = std::make_shared<const std::vector<int>>(std::move(extents));
    var_count_ = static_cast<int>(count);
}

Shape Shape::parse(const std::string& text) {
    std::vector<int> ext;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find('x', pos);
        std::string part = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("Shape: malformed literal '" + text + "'");
        ext.push_back(std::stoi(part));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return Shape(std::move(ext));
}

int Shape::var_id(const VarIndex& v) const {
    const auto& ext = extents();
    if (v.dims() != dims())
        throw std::invalid_argument("VarIndex: dimension mismatch with shape " + str());
    int id = 0;
    for (int i = 0; i < dims(); ++i) {
        if (v.coord[i] < 1 || v.coord[i] > ext[i])
            throw std::invalid_argument("VarIndex: " + v.str() + " out of range for shape " + str());
        id = id * ext[i] + (v.coord[i] - 1);
    }
    return id;
}

VarIndex Shape::var_of(int id) const {
    if (id < 0 || id >= var_count_)
        throw std::invalid_argument("Shape: variable id out of range");
    std::vector<int> c(dims());
    for (int i = dims() - 1; i >= 0; --i) {
        c[i] = id % extent(i) + 1;
        id /= extent(i);
    }
    return VarIndex(std::move(c));
}

void Shape::for_each_index(const std::function<void(const VarIndex&)>& fn) const {
    for (int id = 0; id < var_count_; ++id) fn(var_of(id));
}

std::string Shape::str() const {
    std::ostringstream os;
    for (int i = 0; i < dims(); ++i) {
        if (i) os << 'x';
        os << extent(i);
    }
    return os.str();
}

}  // namespace slicecert
