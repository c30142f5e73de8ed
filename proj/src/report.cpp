#include "tamelat/report.hpp"

#include <sstream>

namespace tamelat {

std::string to_string(ReportStatus status) {
    switch (status) {
        case ReportStatus::pass:
            return "pass";
        case ReportStatus::fail:
            return "fail";
        case ReportStatus::not_applicable:
            return "not-applicable";
        case ReportStatus::budget_exceeded:
            return "budget-exceeded";
    }
    return "fail";
}

ReportStatus parse_report_status(const std::string& text) {
    for (ReportStatus status : {ReportStatus::pass, ReportStatus::fail, ReportStatus::not_applicable,
                                ReportStatus::budget_exceeded}) {
        if (to_string(status) == text) {
            return status;
        }
    }
    throw ParseError("unknown report status '" + text + "'");
}

nlohmann::json to_json(const ReportDocument& report) {
    nlohmann::json outputs = nlohmann::json::object();
    for (const auto& [key, value] : report.outputs) {
        outputs[key] = value;
    }
    for (const auto& [key, vectors] : report.vector_lists) {
        outputs[key] = vectors;
    }
    nlohmann::json out = {
        {"schema_version", report.schema_version},
        {"command", report.command},
        {"inputs", report.inputs},
        {"outputs", outputs},
        {"status", to_string(report.status)},
    };
    if (!report.message.empty()) {
        out["message"] = report.message;
    }
    return out;
}

ReportDocument report_from_json(const nlohmann::json& json) {
    try {
        ReportDocument report;
        report.schema_version = json.at("schema_version").get<std::string>();
        if (report.schema_version != "1") {
            throw ParseError("unsupported schema version " + report.schema_version);
        }
        report.command = json.at("command").get<std::string>();
        report.inputs = json.at("inputs").get<std::map<std::string, std::string>>();
        for (const auto& [key, value] : json.at("outputs").items()) {
            if (value.is_string()) {
                report.outputs[key] = value.get<std::string>();
            } else {
                report.vector_lists[key] = value.get<std::vector<std::vector<std::string>>>();
            }
        }
        report.status = parse_report_status(json.at("status").get<std::string>());
        if (json.contains("message")) {
            report.message = json.at("message").get<std::string>();
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

std::string decimal(const Rational& value) { return value.get_str(); }

std::vector<std::string> decimal_strings(const CoeffVector& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& c : v) {
        out.push_back(c.get_str());
    }
    return out;
}

std::string to_text(const ReportDocument& report) {
    std::ostringstream out;
    out << report.command;
    for (const auto& [key, value] : report.inputs) {
        out << ' ' << key << '=' << value;
    }
    out << '\n';
    for (const auto& [key, value] : report.outputs) {
        out << "  " << key << ": " << value << '\n';
    }
    for (const auto& [key, vectors] : report.vector_lists) {
        out << "  " << key << ":\n";
        for (const auto& v : vectors) {
            out << "    (";
            for (std::size_t i = 0; i < v.size(); ++i) {
                out << (i ? ", " : "") << v[i];
            }
            out << ")\n";
        }
    }
    if (!report.message.empty()) {
        out << "  message: " << report.message << '\n';
    }
    out << "  status: " << to_string(report.status) << '\n';
    return out.str();
}

ReportDocument make_verify_report(const VerificationReport& v) {
    ReportDocument report;
    report.command = "verify";
    report.inputs = {{"N", std::to_string(v.n)}, {"h", v.h.get_str()}, {"a", v.a.get_str()},
                     {"r", v.r.get_str()},       {"s", v.s.get_str()}, {"m", v.m.get_str()}};
    report.outputs = {
        {"bounds_hold", v.bounds.holds ? "true" : "false"},
        {"bounds_lower", decimal(v.bounds.lower)},
        {"bounds_upper", decimal(v.bounds.upper)},
        {"bounds_value", decimal(v.bounds.value)},
        {"index_predicted", v.index_predicted.get_str()},
        {"index_computed", v.index_computed.get_str()},
        {"lambda1_predicted", v.predicted_lambda1.get_str()},
        {"lambda1_enumerated", v.enumerated_lambda1.get_str()},
        {"kissing_number", std::to_string(v.kissing_number)},
        {"center_density_sq_num", v.center_density_sq.get_num().get_str()},
        {"center_density_sq_den", v.center_density_sq.get_den().get_str()},
        {"basis_is_minimal", v.basis_is_minimal ? "true" : "false"},
        {"basis_det_in_sublattice", v.basis_det_in_sublattice.get_str()},
    };
    if (v.corollary_lambda1) {
        report.outputs["lambda1_corollary"] = v.corollary_lambda1->get_str();
    }
    if (v.negative_m) {
        report.outputs["negative_m"] = "true";
    }
    std::vector<std::vector<std::string>> basis;
    for (std::size_t j = 0; j < v.image_basis.cols(); ++j) {
        basis.push_back(decimal_strings(v.image_basis.column(j)));
    }
    report.vector_lists["minimal_basis"] = std::move(basis);
    report.status = v.status == VerificationStatus::pass ? ReportStatus::pass : ReportStatus::not_applicable;
    return report;
}

ReportDocument make_svp_report(const GramMatrix& gram, const ShortVectorReport& svp) {
    ReportDocument report;
    report.command = "svp";
    report.inputs = {{"N", std::to_string(gram.dim())}};
    const Rational density = center_density_sq(gram, svp.lambda1);
    report.outputs = {
        {"lambda1", svp.lambda1.get_str()},
        {"kissing_number", std::to_string(svp.kissing_number)},
        {"volume_sq", volume_sq(gram).get_str()},
        {"center_density_sq_num", density.get_num().get_str()},
        {"center_density_sq_den", density.get_den().get_str()},
        {"well_rounded", is_well_rounded(svp, gram.dim()) ? "true" : "false"},
        {"strongly_well_rounded", is_strongly_wr(svp, gram.dim()) ? "true" : "false"},
        {"has_minimal_basis", has_minimal_basis(svp, gram.dim()) ? "true" : "false"},
        {"nodes", std::to_string(svp.nodes)},
    };
    std::vector<std::vector<std::string>> vectors;
    for (const auto& v : svp.minimal_vectors) {
        vectors.push_back(decimal_strings(v));
    }
    report.vector_lists["minimal_vectors"] = std::move(vectors);
    return report;
}

}  // namespace tamelat
