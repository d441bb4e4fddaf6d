#ifndef RSQ_REPORT_HPP
#define RSQ_REPORT_HPP

#include <string>
#include <vector>

namespace rsq {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;  // witness on failure, optional note on success
};

struct Report {
  std::string subject;
  std::vector<CheckItem> items;

  void add(std::string name, bool pass, std::string detail = {}) {
    items.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& it : other.items) items.push_back({prefix + it.name, it.pass, it.detail});
  }
  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  const CheckItem* first_failure() const {
    for (const auto& it : items)
      if (!it.pass) return &it;
    return nullptr;
  }
  std::size_t count_failed() const {
    std::size_t k = 0;
    for (const auto& it : items) k += it.pass ? 0 : 1;
    return k;
  }
};

}  // namespace rsq

#endif
