#include "echcap/serialize.hpp"

#include "echcap/errors.hpp"

namespace ech {

namespace {
constexpr const char* kCertificateSchema = "echcap.certificate/1";
}

Json certificate_to_json(const Certificate& cert) {
    Json pairs = Json::array();
    for (const auto& [lhs, rhs] : cert.pairs) {
        pairs.push_back(Json{{"lhs", lhs.str()}, {"rhs", rhs.str()}});
    }
    return Json{
        {"schema", kCertificateSchema},
        {"domain", cert.domain.str()},
        {"target", cert.target_domain.str()},
        {"target_generator", cert.target.str()},
        {"lambda", cert.lambda.str()},
        {"n", cert.n()},
        {"pairs", std::move(pairs)},
    };
}

Certificate certificate_from_json(const Json& doc) {
    try {
        if (doc.value("schema", "") != kCertificateSchema) {
            throw CertificateError("unknown certificate schema");
        }
        Certificate cert{
            ToricDomain::parse(doc.at("domain").get<std::string>()),
            ToricDomain::parse(doc.at("target").get<std::string>()),
            ConvexGenerator::parse(doc.at("target_generator").get<std::string>()),
            ConvexGenerator::parse(doc.at("lambda").get<std::string>()),
            {}};
        for (const auto& pair : doc.at("pairs")) {
            cert.pairs.emplace_back(ConvexGenerator::parse(pair.at("lhs").get<std::string>()),
                                    ConvexGenerator::parse(pair.at("rhs").get<std::string>()));
        }
        if (doc.at("n").get<int>() != cert.n()) {
            throw CertificateError("certificate n does not match its pair count");
        }
        return cert;
    } catch (const Json::exception& e) {
        throw CertificateError(std::string("malformed certificate document: ") + e.what());
    }
}

Json verdict_to_json(const Verdict& verdict, const ToricDomain& domain,
                     const ToricDomain& target) {
    Json out{
        {"schema", "echcap.verdict/1"},
        {"domain", domain.str()},
        {"target", target.str()},
        {"verdict", verdict.excluded ? "excluded" : "not_excluded"},
        {"conditional", verdict.conditional},
    };
    if (verdict.excluded) {
        out["failing_target"] = verdict.failing_target->str();
    } else {
        Json certs = Json::array();
        for (const auto& cert : verdict.certificates) {
            certs.push_back(certificate_to_json(cert));
        }
        out["certificates"] = std::move(certs);
    }
    out["trace"] = Json{{"nodes", verdict.trace.nodes_used},
                        {"factorizations", verdict.trace.factorizations},
                        {"assignments", verdict.trace.assignments}};
    return out;
}

Json threshold_to_json(const ThresholdResult& result) {
    return Json{
        {"threshold", result.threshold.str()},
        {"threshold_approx", result.threshold.to_double()},
        {"bracket_lo", result.bracket_lo.str()},
        {"bracket_hi", result.bracket_hi.str()},
        {"binding_target", result.binding_target.str()},
        {"verdict_evaluations", result.verdict_evaluations},
    };
}

}  // namespace ech
