#include "rsq/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rsq {

SMat::SMat(RingPtr ring, int rows, int cols) : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows) {}

SMat SMat::identity(const RingPtr& ring, int n) {
  SMat m(ring, n, n);
  for (int i = 0; i < n; ++i) m.data_[i].push_back({i, Scalar(ring, 1)});
  return m;
}

SMat SMat::unit(const RingPtr& ring, int n, int i, int j, const Scalar& c) {
  SMat m(ring, n, n);
  m.set(i - 1, j - 1, c);
  return m;
}

SMat SMat::diagonal(const std::vector<Scalar>& d) {
  if (d.empty()) throw std::invalid_argument("diagonal: empty");
  SMat m(d.front().ring(), static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
  return m;
}

std::size_t SMat::nnz() const {
  std::size_t k = 0;
  for (const auto& r : data_) k += r.size();
  return k;
}

bool SMat::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i])
      if (j != i) return false;
  return true;
}

Scalar SMat::get(int i, int j) const {
  const auto& r = data_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, int c) { return e.first < c; });
  if (it != r.end() && it->first == j) return it->second;
  return Scalar(ring_);
}

void SMat::set(int i, int j, const Scalar& v) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("SMat::set index");
  auto& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, int c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    if (v.is_zero()) r.erase(it);
    else it->second = v;
  } else if (!v.is_zero()) {
    r.insert(it, {j, v});
  }
}

void SMat::add_to(int i, int j, const Scalar& v) {
  if (v.is_zero()) return;
  set(i, j, get(i, j) + v);
}

namespace {

void check_shape(const SMat& a, const SMat& b, bool product) {
  if (product ? a.cols() != b.rows() : (a.rows() != b.rows() || a.cols() != b.cols()))
    throw std::invalid_argument("matrix shape mismatch");
}

std::vector<SMat::Entry> merge_rows(const std::vector<SMat::Entry>& x, const std::vector<SMat::Entry>& y, bool sub) {
  std::vector<SMat::Entry> out;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back({y[j].first, sub ? -y[j].second : y[j].second});
      ++j;
    } else {
      Scalar v = sub ? x[i].second - y[j].second : x[i].second + y[j].second;
      if (!v.is_zero()) out.push_back({x[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SMat operator+(const SMat& a, const SMat& b) {
  check_shape(a, b, false);
  SMat m(a.ring_, a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i) m.data_[i] = merge_rows(a.data_[i], b.data_[i], false);
  return m;
}

SMat operator-(const SMat& a, const SMat& b) {
  check_shape(a, b, false);
  SMat m(a.ring_, a.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i) m.data_[i] = merge_rows(a.data_[i], b.data_[i], true);
  return m;
}

SMat operator*(const SMat& a, const SMat& b) {
  check_shape(a, b, true);
  SMat m(a.ring_, a.rows_, b.cols_);
  std::map<int, Scalar> acc;
  for (int i = 0; i < a.rows_; ++i) {
    acc.clear();
    for (const auto& [k, x] : a.data_[i]) {
      for (const auto& [j, y] : b.data_[k]) {
        auto it = acc.find(j);
        if (it == acc.end()) acc.emplace(j, x * y);
        else it->second += x * y;
      }
    }
    for (auto& [j, v] : acc)
      if (!v.is_zero()) m.data_[i].push_back({j, std::move(v)});
  }
  return m;
}

SMat operator*(const Scalar& c, const SMat& a) {
  SMat m(a.ring_, a.rows_, a.cols_);
  if (c.is_zero()) return m;
  for (int i = 0; i < a.rows_; ++i)
    for (const auto& [j, v] : a.data_[i]) m.data_[i].push_back({j, c * v});
  return m;
}

SMat SMat::operator-() const { return Scalar(ring_, -1) * *this; }

bool operator==(const SMat& a, const SMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (int i = 0; i < a.rows_; ++i) {
    if (a.data_[i].size() != b.data_[i].size()) return false;
    for (std::size_t k = 0; k < a.data_[i].size(); ++k)
      if (a.data_[i][k].first != b.data_[i][k].first || a.data_[i][k].second != b.data_[i][k].second) return false;
  }
  return true;
}

SMat SMat::transpose() const {
  SMat m(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) m.data_[j].push_back({i, v});
  return m;
}

SMat SMat::map(const std::function<Scalar(const Scalar&)>& f, const RingPtr& target) const {
  SMat m(target, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) {
      Scalar w = f(v);
      if (!w.is_zero()) m.data_[i].push_back({j, w});
    }
  return m;
}

SMat SMat::convert(const RingPtr& target) const {
  return map([&](const Scalar& x) { return x.convert(target); }, target);
}

SMat SMat::substitute(const std::map<std::string, Scalar>& b, const RingPtr& target) const {
  return map([&](const Scalar& x) { return x.substitute(b, target); }, target);
}

SMat SMat::diagonal_inverse() const {
  if (!is_diagonal() || rows_ != cols_) throw std::invalid_argument("diagonal_inverse: not diagonal");
  SMat m(ring_, rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    if (data_[i].empty()) throw ScalarError("diagonal_inverse: singular");
    m.data_[i].push_back({i, data_[i][0].second.inv()});
  }
  return m;
}

SMat SMat::pow(int k) const {
  if (k < 0) return diagonal_inverse().pow(-k);
  SMat result = identity(ring_, rows_);
  for (int i = 0; i < k; ++i) result = result * *this;
  return result;
}

std::string SMat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) os << "(" << i + 1 << "," << j + 1 << "): " << v << "\n";
  return os.str();
}

SMat kron(const SMat& a, const SMat& b) {
  SMat m(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < b.rows(); ++k)
      for (const auto& [j, x] : a.row(i))
        for (const auto& [l, y] : b.row(k)) m.set(i * b.rows() + k, j * b.cols() + l, x * y);
  return m;
}

SMat flip(const RingPtr& ring, int n) {
  SMat m(ring, n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(j * n + i, i * n + j, Scalar(ring, 1));
  return m;
}

SMat commutator(const SMat& a, const SMat& b) { return a * b - b * a; }

std::string Mismatch::describe() const {
  std::ostringstream os;
  os << "entry (" << row + 1 << "," << col + 1 << "): lhs = " << lhs << ", rhs = " << rhs;
  return os.str();
}

std::optional<Mismatch> first_mismatch(const SMat& a, const SMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("first_mismatch: shape");
  for (int i = 0; i < a.rows(); ++i) {
    for (const auto& [j, v] : a.row(i)) {
      Scalar w = b.get(i, j);
      if (v != w) return Mismatch{i, j, v, w};
    }
    for (const auto& [j, w] : b.row(i)) {
      if (a.get(i, j).is_zero()) return Mismatch{i, j, Scalar(a.ring()), w};
    }
  }
  return std::nullopt;
}

}  // namespace rsq
