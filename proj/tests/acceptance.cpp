// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "rsq/certify.hpp"

using namespace rsq;

namespace {

struct Case {
  Family family;
  int rank;
};

std::vector<Case> range(Family f, int lo, int hi) {
  std::vector<Case> v;
  for (int n = lo; n <= hi; ++n) v.push_back({f, n});
  return v;
}

std::vector<Case> join(std::initializer_list<std::vector<Case>> parts) {
  std::vector<Case> v;
  for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
  return v;
}

int failures = 0;

// Runs the checks on every case; a case also fails when it exceeds the per-case time limit.
void criterion(int id, const std::string& title, const std::vector<std::string>& checks, const std::vector<Case>& cases,
               double limit) {
  std::vector<CertifyTask> tasks;
  for (const auto& c : cases)
    for (const auto& k : checks) tasks.push_back({k, c.family, c.rank});
  auto t0 = std::chrono::steady_clock::now();
  auto rep = certify(tasks);
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string witness;
  double worst = 0;
  std::ostringstream subjects;
  for (const auto& e : rep.entries) {
    worst = std::max(worst, e.seconds);
    if (!e.pass && witness.empty()) witness = e.check + " " + e.subject() + ": " + e.witness;
    if (e.seconds > limit && witness.empty())
      witness = e.check + " " + e.subject() + " took " + std::to_string(e.seconds) + " s";
  }
  std::string last;
  for (const auto& c : cases) {
    std::string s = std::string(1, family_char(c.family)) + std::to_string(c.rank);
    if (s != last) subjects << " " << s;
    last = s;
  }
  bool pass = witness.empty();
  failures += pass ? 0 : 1;
  std::cout << (pass ? "PASS" : "FAIL") << " [" << std::setw(2) << id << "] " << title << " :" << subjects.str() << " ("
            << rep.entries.size() << " checks, " << std::fixed << std::setprecision(2) << total << " s, slowest "
            << worst << " s, limit " << limit << " s)";
  if (!pass) std::cout << " -- " << witness;
  std::cout << std::endl;
}

}  // namespace

int main() {
  using F = Family;
  criterion(1, "explicit R-hat equals the factorized product", {"rmatrix.route"},
            {{F::A, 2}, {F::A, 3}, {F::B, 2}, {F::B, 3}, {F::C, 2}, {F::C, 3}, {F::D, 3}}, 60);
  criterion(2, "eigenvalues on highest weight vectors, minimal polynomial", {"rmatrix.eigen"},
            {{F::A, 2}, {F::A, 3}, {F::B, 2}, {F::B, 3}, {F::C, 2}, {F::C, 3}, {F::D, 3}}, 5);
  criterion(3, "printed inverses", {"rmatrix.inverse"}, {{F::B, 2}, {F::C, 2}, {F::D, 3}}, 30);
  criterion(4, "braid relation on V (x) V (x) V", {"rmatrix.braid"}, {{F::A, 2}, {F::B, 2}, {F::C, 2}, {F::D, 3}},
            600);
  criterion(5, "affine intertwiner for all e_i, f_i, w_i, w'_i", {"affine.intertwine"},
            {{F::A, 2}, {F::B, 2}, {F::C, 2}, {F::D, 3}}, 300);
  criterion(6, "spectral Yang-Baxter equation", {"affine.ybe"}, {{F::A, 2}, {F::C, 2}, {F::B, 2}, {F::D, 3}}, 600);
  criterion(7, "Baxterization reproduces the explicit R(z)", {"affine.baxterize"},
            {{F::A, 2}, {F::A, 3}, {F::B, 2}, {F::B, 3}, {F::C, 2}, {F::C, 3}, {F::D, 3}, {F::D, 4}}, 60);
  criterion(8, "pairing constants: closed forms, c_gamma recursion and oracle", {"pairing.constants"},
            {{F::A, 2}, {F::A, 3}, {F::B, 2}, {F::C, 2}, {F::D, 3}}, 300);
  criterion(9, "PBW orthogonality up to height 3", {"pairing.pbw"}, {{F::A, 2}, {F::B, 2}}, 300);
  criterion(10, "Weyl dimensions of the tensor square add up to N^2", {"rootdata.dimensions"},
            join({range(F::B, 2, 4), range(F::C, 2, 4), range(F::D, 3, 4)}), 1);
  criterion(11, "one-parameter relations and rescaled root vectors", {"embed.dj", "embed.kappa", "embed.rootvec"},
            join({range(F::A, 1, 3), range(F::B, 2, 3), range(F::C, 2, 3), {{F::D, 3}}}), 60);
  criterion(12, "A2 twist (finite and affine, exp(2 phi_ij) = (rs)^(1/2) for i < j), B2 obstruction",
            {"embed.twist"}, {{F::A, 2}, {F::B, 2}}, 60);
  criterion(13, "convex orders: printed lists, convexity, telescoping", {"lyndon.orders"},
            join({range(F::A, 1, 5), range(F::B, 2, 5), range(F::C, 2, 5), range(F::D, 3, 5)}), 5);
  std::cout << (failures == 0 ? "all 13 criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
