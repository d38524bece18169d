#ifndef TLCAT_SYSTEM_IO_HPP
#define TLCAT_SYSTEM_IO_HPP

#include <iosfwd>
#include <string>

#include "tlcat/monoidal_system.hpp"

namespace tlcat {

/// Serializes a system to the interchange format: format version, labels
/// (id, name, is_unit), fusion multiplicities, and F-symbol entries with 17
/// significant decimal digits. Output is deterministic: save -> load -> save
/// is byte-identical.
std::string serialize_system(const MonoidalSystem& sys);
void save_system(const MonoidalSystem& sys, const std::string& path);

/// Parses the interchange format; unknown keys are ignored. Malformed input
/// throws with field context.
MonoidalSystem parse_system(const std::string& text);
MonoidalSystem load_system(const std::string& path);

/// FNV-1a content hash of the canonical serialization, as a hex string.
std::string fingerprint(const MonoidalSystem& sys);

}  // namespace tlcat

#endif
