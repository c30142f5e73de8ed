#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "tamelat/lattice.hpp"
#include "tamelat/tame.hpp"

namespace tamelat {

enum class ReportStatus { pass, fail, not_applicable, budget_exceeded };

std::string to_string(ReportStatus status);
ReportStatus parse_report_status(const std::string& text);

/// Machine-readable result of one CLI command. Every number is carried as a
/// decimal string so arbitrary-precision values survive any JSON consumer.
struct ReportDocument {
    std::string schema_version = "1";
    std::string command;
    std::map<std::string, std::string> inputs;
    std::map<std::string, std::string> outputs;
    std::map<std::string, std::vector<std::vector<std::string>>> vector_lists;
    ReportStatus status = ReportStatus::pass;
    std::string message;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

nlohmann::json to_json(const ReportDocument& report);
ReportDocument report_from_json(const nlohmann::json& json);

std::string to_text(const ReportDocument& report);

std::string decimal(const Rational& value);
std::vector<std::string> decimal_strings(const CoeffVector& v);

ReportDocument make_verify_report(const VerificationReport& verification);
ReportDocument make_svp_report(const GramMatrix& gram, const ShortVectorReport& svp);

}  // namespace tamelat
