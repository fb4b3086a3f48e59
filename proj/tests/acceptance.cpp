#include <cstdio>

#include "fracfield/verify.hpp"

int main() {
  namespace v = fracfield::verify;
  int failed = 0;
  for (int id = 1; id <= v::criterion_count(); ++id) {
    v::Check c = v::criterion(id);
    std::printf("criterion %d: %s  %s  error=%.3g tol=%.3g  %.2fs  %s\n", id, c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.error, c.tol, c.seconds, c.detail.c_str());
    std::fflush(stdout);
    if (!c.pass) ++failed;
  }
  std::printf("%d of %d criteria passed\n", v::criterion_count() - failed, v::criterion_count());
  return failed == 0 ? 0 : 1;
}
