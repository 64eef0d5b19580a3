// One line per acceptance criterion; exit status 0 only if all pass.

#include <array>
#include <cstdio>
#include <iostream>
#include <memory>

#include "semiorth/acceptance.hpp"

using namespace semiorth;

namespace {

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  status = pclose(pipe.release());
  return out;
}

std::string seconds(double t) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2fs", t);
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  std::string cli = SEMIORTH_CLI;
  if (argc > 1) cli = argv[1];
  bool all = true;

  for (const auto& run : acceptance_criteria(seed, kDefaultCutoff)) {
    CriterionResult c;
    std::string error;
    try {
      c = run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool ok = error.empty() && c.passed() && c.within_time();
    all = all && ok;
    double worst = 0;
    for (const auto& [label, t] : c.timings) worst = std::max(worst, t);
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  [" << c.checks.size()
              << " checks, max " << seconds(worst) << " < " << seconds(c.limit_seconds) << "]\n";
    if (!error.empty()) std::cout << "    exception: " << error << "\n";
    for (const auto& ch : c.checks)
      if (ch.status != CheckStatus::Pass) std::cout << "    " << status_name(ch.status) << " " << ch.name << ": " << ch.witness << "\n";
    for (const auto& [label, t] : c.timings)
      if (t >= c.limit_seconds) std::cout << "    too slow: " << label << " " << seconds(t) << "\n";
  }

  int s1 = 0, s2 = 0;
  std::string cmd = "\"" + cli + "\" corpus --seed " + std::to_string(seed);
  auto r1 = run_capture(cmd, s1), r2 = run_capture(cmd, s2);
  bool det = s1 == 0 && s2 == 0 && !r1.empty() && r1 == r2;
  all = all && det;
  std::cout << "criterion 8: " << (det ? "PASS" : "FAIL") << "  corpus reports byte-identical across runs  [" << r1.size()
            << " bytes, exit " << s1 << "/" << s2 << "]\n";
  return all ? 0 : 1;
}
