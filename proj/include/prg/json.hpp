#ifndef PRG_JSON_HPP
#define PRG_JSON_HPP

// single vendored dependency point for nlohmann/json
#include <json.hpp>

#endif
