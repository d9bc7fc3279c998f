#pragma once

#include <string>

#include "fobce/bce.hpp"
#include "fobce/tptp.hpp"

namespace fobce {

std::string to_string(Mode m);
std::string to_string(Strategy s);
std::string to_string(Reason r);

/// One line per elimination: clause name, reason, blocking literal in TPTP
/// syntax (or '-') and the number of partner clauses tested. Lines starting
/// with '#' carry the counters. Wall time is left out so reports of equal
/// runs are byte-identical.
std::string report_text(const BlockReport& r, const tptp::ProblemFile& problem, const std::string& source = {});

/// The same content as a JSON document. A non-empty source adds a "file"
/// entry (and a '# file' line to the text form).
std::string report_json(const BlockReport& r, const tptp::ProblemFile& problem, const std::string& source = {});

}  // namespace fobce
