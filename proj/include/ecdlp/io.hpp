#pragma once

// Text forms shared by files and the CLI. All integers travel as decimal
// strings; a point is "infinity" or the pair of its coordinates. Writers
// emit deterministic bytes so fixtures diff cleanly.

#include <optional>
#include <string>
#include <string_view>

#include "ecdlp/dlp.hpp"
#include "ecdlp/keys.hpp"
#include "ecdlp/params.hpp"

namespace ecdlp::io {

// CLI form: "infinity" or "x,y".
std::string point_to_text(const Point& pt);
// Parses the CLI form against a curve and checks membership (NotOnCurve).
Point point_from_text(std::string_view text, const CurveParams& c);

// {"p":"17","a":"2","b":"2","g":["5","1"],"n":"19","h":"1"}
// Parsing does not check the tuple's invariants; validate_params does.
std::string params_to_json(const DomainParams& params);
DomainParams params_from_json(std::string_view text);

// JSON array of tuples, as written by curve-search.
std::string params_list_to_json(const std::vector<DomainParams>& list);
std::vector<DomainParams> params_list_from_json(std::string_view text);

// {"d":"7","q":["0","6"]}; the public-only form omits "d".
struct StoredKey {
  std::optional<BigUint> d;
  Point q;
};
std::string keypair_to_json(const KeyPair& kp, bool include_private = true);
StoredKey keypair_from_json(std::string_view text, const CurveParams& c);

// {"method":"linear_walk","d":"7","group_ops":6,"iterations":7,"seconds":...}
std::string attack_result_to_json(const AttackResult& result);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace ecdlp::io
