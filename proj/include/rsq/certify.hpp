#ifndef RSQ_CERTIFY_HPP
#define RSQ_CERTIFY_HPP

#include <string>
#include <vector>

#include "rsq/io.hpp"
#include "rsq/rootdata.hpp"

namespace rsq {

struct CertificateEntry {
  std::string check;
  Family family = Family::A;
  int rank = 0;
  bool pass = false;
  std::string witness;  // first failing item, empty on success
  double seconds = 0;
  std::string subject() const;  // e.g. "B2"
};

struct CertificateReport {
  std::vector<CertificateEntry> entries;
  bool ok() const;
  std::size_t count_failed() const;
  // One line per entry: "PASS rmatrix.braid B2" or "FAIL ... : witness".
  std::string text(bool timings = false) const;
  json to_json(bool timings = false) const;
};

struct CertifyTask {
  std::string check;
  Family family;
  int rank;
};

// All check names, in report order.
const std::vector<std::string>& check_names();
bool check_applies(const std::string& check, Family family, int rank, bool long_mode = false);
// Runs one named check; throws std::invalid_argument for an unknown name.
Report run_check(const std::string& check, Family family, int rank);

// Thread count from RSQ_THREADS, else the hardware concurrency.
int default_threads();

// Runs the tasks in parallel; entries come back sorted by (family, rank, check).
CertificateReport certify(const std::vector<CertifyTask>& tasks, int threads = default_threads());

// Every applicable check for ranks up to max_rank; each family also gets its
// smallest desk rank (A1, B2, C2, D3) when max_rank is below it.
std::vector<CertifyTask> certify_all_tasks(int max_rank, bool long_mode = false);

}  // namespace rsq

#endif
