#pragma once

#include <string>
#include <vector>

#include "dalie/toralg/element.hpp"

namespace dalie::rep {

using toralg::Letter;
using toralg::TorElement;

/// Weight in (h^e_tor)*: values on h_1..h_n, c1, d1, c2, d2.
struct TorWeight {
  std::vector<Rational> fin;
  Rational c1 = 0;
  Rational d1 = 0;
  Rational c2 = 0;
  Rational d2 = 0;

  static TorWeight zero(int rank) { return TorWeight{std::vector<Rational>(rank, 0)}; }
  /// Affine weight from values on h_0..h_n (c1 = h_0 + h_θ).
  static TorWeight affine(const liecore::ChevalleyAlgebra& g, const std::vector<long>& node_values, Rational d1 = 0);
  static TorWeight finite(const liecore::FinWeight& w);

  /// λ(h_0) = λ(c1) - λ(h_θ)
  Rational h0(const liecore::ChevalleyAlgebra& g) const;
  /// Value on node i = 0..n.
  Rational node(const liecore::ChevalleyAlgebra& g, int i) const;
  /// Value on a Cartan-type letter (h_i, c1 t2^0, c2, d1, d2); throws otherwise.
  Rational eval(const liecore::ChevalleyAlgebra& g, const Letter& l) const;
  /// Weight shifted by the root of a letter.
  TorWeight shifted(const liecore::ChevalleyAlgebra& g, const Letter& l) const;

  TorWeight operator+(const TorWeight& o) const;
  TorWeight operator-() const;
  bool operator==(const TorWeight& o) const = default;
  bool operator<(const TorWeight& o) const;

  liecore::FinWeight finite_part() const { return liecore::FinWeight{fin}; }
  std::string to_string() const;
};

}  // namespace dalie::rep
