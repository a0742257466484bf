#pragma once

#include <string>

#include <json.hpp>

#include "swproc/domain.hpp"
#include "swproc/message_pool.hpp"

namespace swproc {

using Json = nlohmann::json;

Json to_json(const Phase& phase);
Phase phase_from_json(const Json& j);

Json to_json(const ProjectSpec& p);
ProjectSpec project_from_json(const Json& j);

Json to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const Json& j);

Json to_json(const RunRecord& rec);
RunRecord run_record_from_json(const Json& j);

Json to_json(const Message& msg);
Message message_from_json(const Json& j);

/// Reads a whole file; throws IoFailure when it cannot be opened.
std::string read_file(const std::string& path);

/// Atomic write: temp file in the same directory, then rename.
void write_file(const std::string& path, const std::string& content);

Json parse_json_file(const std::string& path);

} // namespace swproc
