// Prints edge, triangle and matching counts of S_{n,s-2} next to the closed
// forms, for one s and a range of n.
//
//   split_graph_report [s] [n_max]

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include <satlab/satlab.hpp>

int main(int argc, char **argv) {
  const int s = argc > 1 ? std::atoi(argv[1]) : 5;
  const int n_max = argc > 2 ? std::atoi(argv[2]) : 20;
  if (s < 4 || n_max < s) {
    std::cerr << "usage: split_graph_report [s >= 4] [n_max >= s]\n";
    return 1;
  }

  std::cout << std::left << std::setw(5) << "n" << std::setw(8) << "edges" << std::setw(10)
            << "K_3" << std::setw(14) << "M_2" << std::setw(14) << "M_2 leading"
            << "saturated\n";
  for (int n = s; n <= n_max; ++n) {
    const satlab::Graph g = satlab::make_split({n, s - 2});
    std::cout << std::left << std::setw(5) << n << std::setw(8) << g.size() << std::setw(10)
              << satlab::count_cliques(g, 3) << std::setw(14) << satlab::count_matchings(g, 2)
              << std::setw(14) << satlab::matchings_in_split_leading(n, s, 2)
              << (satlab::check_saturation(g, s).is_saturated ? "yes" : "no") << "\n";
  }
}
