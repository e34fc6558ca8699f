#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "qh/io.hpp"

namespace qh {

/// Machine-readable outcome of one command run.  Timing never enters the
/// serialized form (it goes to stderr), so identical invocations render
/// byte-identically.  A "fail" outcome must carry at least one witness.
struct RunReport {
    std::string command;
    json parameters = json::object();
    std::string outcome = "info";  // pass | fail | info
    json data = json::object();
    json witnesses = json::array();
    double timing_ms = 0.0;

    std::string render() const {
        if (outcome == "fail" && witnesses.empty())
            throw std::logic_error("RunReport: fail outcome without witnesses");
        json root{{"meta", make_meta(command, parameters)},
                  {"outcome", outcome},
                  {"data", data},
                  {"witnesses", witnesses}};
        return root.dump(2) + "\n";
    }
};

}  // namespace qh
