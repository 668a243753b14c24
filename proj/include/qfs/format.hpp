#pragma once

#include <string>

namespace qfs {

// Locale-independent number formatting with 12 significant digits ('.' decimal
// separator). Every CSV/JSON artifact goes through this so golden files stay
// byte-stable.
std::string format_sig12(double value);

// The same value after a round trip through format_sig12; used before numbers
// enter JSON documents.
double round_sig12(double value);

}  // namespace qfs
