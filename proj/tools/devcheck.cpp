// Development harness: runs every catalog identity at a few seeded points in
// the requested tower and prints one line per identity with the worst
// residual. Not installed; used to validate the catalog quickly.

#include <cstdio>
#include <cstring>

#include "qbil/verify.hpp"

using namespace qbil;

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 4;
  uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 42;
  const char* only = (argc > 3 && argv[3][0]) ? argv[3] : nullptr;
  CheckOptions opt;
  opt.tower = Tower::Double;
  opt.tower_forced = argc > 4 && std::strcmp(argv[4], "rec") == 0 ? false : true;
  if (argc > 4 && std::strcmp(argv[4], "big") == 0) {
    opt.tower = Tower::Big;
    opt.tower_forced = true;
  }
  int bad = 0;
  for (const Identity& I : catalog()) {
    if (only && I.meta.id != only) continue;
    double worst = 0.0;
    int pass = 0, other = 0;
    std::string note;
    for (int i = 0; i < n; ++i) {
      try {
        PointRecord pr = sample_point(I, seed, uint64_t(i), opt);
        VerificationReport rep = check_identity(I, pr, opt);
        if (rep.status == Status::PASS || rep.status == Status::FAIL) {
          worst = std::max(worst, rep.rel_residual);
          if (rep.status == Status::PASS) pass++;
        } else {
          other++;
          note = status_name(rep.status) + std::string(":") + rep.error;
        }
      } catch (const Error& e) {
        other++;
        note = e.what();
      }
    }
    bool ok = pass == n;
    if (!ok) bad++;
    std::printf("%-28s pass=%d/%d other=%d worst_rel=%.3e %s\n", I.meta.id.c_str(), pass, n,
                other, worst, note.c_str());
  }
  return bad ? 1 : 0;
}
