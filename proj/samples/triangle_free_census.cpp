// Lists every maximal triangle-free graph on n <= 8 vertices with its edge
// count and number of 2-matchings.

#include <cstdlib>
#include <iostream>

#include <satlab/satlab.hpp>

int main(int argc, char **argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 6;
  try {
    const auto classes = satlab::enumerate_saturated(n, 3);
    for (const auto &c : classes)
      std::cout << c.certificate.bytes << "  edges=" << c.graph.size()
                << "  M_2=" << satlab::count_matchings(c.graph, 2) << "\n";
    std::cout << classes.size() << " classes\n";
  } catch (const satlab::Error &e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
