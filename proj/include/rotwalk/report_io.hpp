#pragma once

// Serialization of experiment reports. CSV carries the bare tables with
// pinned headers; JSON mirrors the same fields and adds a meta object.
// All reals are printed with 17 significant digits (round-trip safe) and
// files use LF line endings, so identical configs give identical bytes.

#include "rotwalk/experiments.hpp"

#include <iosfwd>
#include <string>

namespace rotwalk {

// %.17g; infinities print as "inf" in CSV and become null in JSON.
std::string format_real(double v);

void write_verify_csv(const VerifyReport& rep, std::ostream& out);
void write_verify_json(const VerifyReport& rep, std::ostream& out);
void write_walk_csv(const WalkReport& rep, std::ostream& out);
void write_walk_json(const WalkReport& rep, std::ostream& out);
void write_dioph_csv(const DiophReport& rep, std::ostream& out);
void write_dioph_json(const DiophReport& rep, std::ostream& out);

// Write to the configured output path ("-" = stdout) in the configured
// format. Throws IoError when the destination cannot be written.
void write_report(const VerifyReport& rep);
void write_report(const WalkReport& rep);
void write_report(const DiophReport& rep);

}  // namespace rotwalk
