#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "reslift/parse.hpp"

namespace reslift {

struct SessionOptions {
  // Verify exactness of the target complex before any lift is attempted.
  bool check_exactness = false;
};

struct OutputRecord {
  std::string command;        // canonical text of the command that produced it
  std::string text;           // human-readable block, newline terminated
  nlohmann::ordered_json data;  // structured payload, keys in fixed order
};

struct SessionResult {
  RingPtr ring;
  std::vector<std::string> commands;  // canonical text of every command
  std::vector<OutputRecord> outputs;  // records from print and report verbs
};

// Execute the commands in order.  Engine failures are rethrown as Error
// with the 1-based command index and source line prepended.
SessionResult run_session(const Session& session, const SessionOptions& options = {});

std::string emit_text(const SessionResult& result);
std::string emit_json(const SessionResult& result);

}  // namespace reslift
