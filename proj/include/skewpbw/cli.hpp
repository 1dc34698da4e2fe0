#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "skewpbw/orelocal.hpp"

namespace skewpbw {

// Runs one command (arguments without the program name). Returns the exit
// code: 0 success, 1 failed check, 2 usage or input error.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "s \ a" is the left fraction s^-1 a, "a / s" the right fraction a s^-1. The
// separator needs a space on both sides and must sit outside parentheses.
Fraction parseFraction(const std::string& text, const MultiplicativeSet& set);
std::string formatFraction(const Fraction& x);

}  // namespace skewpbw
