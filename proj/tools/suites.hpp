#pragma once

#include <iosfwd>

namespace fibsum::cli {

// Invariant sweeps, one per library module. Each prints one "ok ..." line
// per sweep (or "FAIL ..." with the first failing witness) and returns
// whether every verdict held.
bool suite_identities(std::ostream& out);
bool suite_pisano(std::ostream& out);
bool suite_primes(std::ostream& out);
bool suite_selfsum(std::ostream& out);
bool suite_all(std::ostream& out);

}  // namespace fibsum::cli
