#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cjkit {

// A named reproduction: runs one built-in fixture and compares every
// outcome against its frozen expectations.
struct ReproResult {
  std::string name;
  bool ok = true;
  std::vector<std::string> lines;

  void expect(bool pass, const std::string& what);
};

// Names: countermodel, c3, dog4, dog4-full, lemma3, thm-cond5,
// cond5-upset, cases. Throws UnknownFixture otherwise.
ReproResult run_fixture(const std::string& name);

const std::vector<std::string>& repro_names();

// Prints the result; returns 0 when everything matched, 1 otherwise.
int run_repro(const std::string& name, std::ostream& out);

}  // namespace cjkit
