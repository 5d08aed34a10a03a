#pragma once

#include "dalie/toralg/element.hpp"

namespace dalie::toralg {

/// The three blocks R_tor(>), R_tor(0), R_tor(<) of the toroidal root set.
enum class RootClass { positive, imaginary, negative };

std::string to_string(RootClass c);

/// Throws for the zero vector or a finite part outside R_fin ∪ {0}.
RootClass classify_root(const liecore::ChevalleyAlgebra& g, const TorRoot& root);

/// Class of a single letter's root; c1 t2^s with s != 0 counts as imaginary.
/// Throws for letters of weight zero (Cartan, c1, c2, d1, d2).
RootClass classify_letter(const liecore::ChevalleyAlgebra& g, const Letter& l);

}  // namespace dalie::toralg
