// Klein four-group with its nontrivial cocycle: the (G,alpha)-matrix of nu,
// its Fourier block, the determinant factorization and a tight frame.

#include <iostream>

#include "projframe/projframe.hpp"

int main() {
  using namespace projframe;
  const IrreducibleSetPtr r = klein_irreducibles();
  const GAlphaMatrix m(r->cocycle_ptr(), ComplexVector{1.0, 2.0, 3.0, 4.0});

  std::cout << "M_alpha(nu):\n";
  const ComplexMatrix dense = to_dense(m);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) std::cout << " " << dense(i, j).real();
    std::cout << "\n";
  }

  const FourierImage img = forward(m.nu(), r);
  std::cout << "Fourier block at rho:\n";
  for (std::size_t i = 0; i < 2; ++i) std::cout << " " << img[0](i, 0).real() << " " << img[0](i, 1).real() << "\n";
  std::cout << "det via blocks = " << determinant(m, r).real() << ", dense = " << determinant_dense(dense).real() << "\n";

  // Orbit of v with |v|^2 = d/|G| = 1/2 under rho is a normalised tight frame.
  const ComplexVector v{std::sqrt(0.5), 0.0};
  const FrameGramian g = gramian_of_orbit(klein_rep(r->cocycle_ptr()), v);
  std::cout << "orbit Gramian tight: " << std::boolalpha << is_tight(g, r).tight << ", class: " << classify(g, r).tag << "\n";
}
