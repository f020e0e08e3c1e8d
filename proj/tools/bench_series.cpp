#include <chrono>
#include <functional>
#include <iostream>
#include <string>

#include "omalg/series.hpp"
#include "omalg/signature.hpp"

namespace {

double time_once(const std::function<omalg::Series()>& f, omalg::Series& out) {
  auto start = std::chrono::steady_clock::now();
  out = f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int trunc = argc > 1 ? std::stoi(argv[1]) : 300;
  for (const std::string& name : {"binary", "nary:3", "omega"}) {
    omalg::OmegaSignature sig = omalg::parse_signature(name);
    omalg::Series a(0), b(0);
    double serial = time_once([&] { return omalg::solve_free_series_serial(sig, trunc); }, a);
    double parallel = time_once([&] { return omalg::solve_free_series(sig, trunc); }, b);
    bool same = a == b;
    std::cout << name << " trunc=" << trunc << " serial=" << serial << "s parallel=" << parallel
              << "s speedup=" << (parallel > 0 ? serial / parallel : 0) << " match=" << (same ? "yes" : "NO")
              << "\n";
    if (!same) return 1;
  }
  return 0;
}
