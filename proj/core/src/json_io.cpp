#include "slicestar/json_io.hpp"

#include "slicestar/errors.hpp"

namespace slicestar {

void to_json(json& j, const Quaternion& q) { j = json::array({q.w, q.x, q.y, q.z}); }

void from_json(const json& j, Quaternion& q) {
    if (!j.is_array() || j.size() != 4) {
        throw json::type_error::create(302, "quaternion must be [w,x,y,z]", &j);
    }
    q = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

void to_json(json& j, const UnitImaginary& u) { j = json::array({u.x, u.y, u.z}); }

void from_json(const json& j, UnitImaginary& u) {
    if (!j.is_array() || j.size() != 3) {
        throw json::type_error::create(302, "imaginary unit must be [x,y,z]", &j);
    }
    u = make_unit(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

void to_json(json& j, const SlicePoint& p) {
    j = json::object();
    j["x"] = p.x();
    j["y"] = p.y();
    if (p.unit()) {
        j["I"] = *p.unit();
    } else {
        j["I"] = nullptr;
    }
}

void from_json(const json& j, SlicePoint& p) {
    auto x = j.at("x").get<std::vector<double>>();
    auto y = j.at("y").get<std::vector<double>>();
    if (j.contains("I") && !j.at("I").is_null()) {
        p = SlicePoint::make(std::move(x), std::move(y), j.at("I").get<UnitImaginary>());
    } else {
        p = SlicePoint::real(std::move(x));
    }
}

void to_json(json& j, const ComplexPath& p) {
    j = json::object();
    j["n"] = p.dim();
    json samples = json::array();
    for (const ComplexPoint& z : p.samples) {
        json re = json::array(), im = json::array();
        for (const std::complex<double>& c : z) {
            re.push_back(c.real());
            im.push_back(c.imag());
        }
        samples.push_back(json::array({re, im}));
    }
    j["samples"] = std::move(samples);
}

void from_json(const json& j, ComplexPath& p) {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<ComplexPoint> samples;
    for (const json& s : j.at("samples")) {
        const auto re = s.at(0).get<std::vector<double>>();
        const auto im = s.at(1).get<std::vector<double>>();
        if (re.size() != n || im.size() != n) {
            throw json::type_error::create(302, "path sample dimension mismatch", &j);
        }
        ComplexPoint z(n);
        for (std::size_t l = 0; l < n; ++l) z[l] = {re[l], im[l]};
        samples.push_back(std::move(z));
    }
    p = make_path(std::move(samples));
}

void to_json(json& j, const CheckReport& r) {
    j = json::object();
    j["verdict"] = to_string(r.verdict);
    j["witnesses"] = r.witnesses;
    j["resolution"] = r.resolution;
}

void to_json(json& j, const StemValue& v) {
    j = json::object();
    j["F1"] = v.F1;
    j["F2"] = v.F2;
}

void from_json(const json& j, StemValue& v) {
    v.F1 = j.at("F1").get<Quaternion>();
    v.F2 = j.at("F2").get<Quaternion>();
}

Domain domain_from_json(const json& j) {
    return make_domain(j.at("name").get<std::string>(),
                       j.value("params", json::object()));
}

PathSliceFn fn_from_json(const json& j, Domain domain) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "poly") {
        return make_polynomial(j.at("coeffs").get<std::vector<Quaternion>>(),
                               std::move(domain), j.value("name", "poly"));
    }
    if (type == "const") {
        return make_constant(j.at("value").get<Quaternion>(), std::move(domain));
    }
    if (type == "identity") return make_identity(std::move(domain));
    if (type == "one") {
        return make_constant(Quaternion(1.0), std::move(domain));
    }
    if (type == "component-x") return make_component_x(std::move(domain));
    if (type == "conj-identity") return make_conj_identity(std::move(domain));
    if (type == "exp-series") {
        return make_exp_series(std::move(domain), j.value("terms", 12));
    }
    throw Error("unknown function type: " + type);
}

ComplexPath path_from_json(const json& j) {
    if (!j.contains("generator")) {
        return j.get<ComplexPath>();
    }
    const std::string kind = j.at("generator").get<std::string>();
    if (kind == "segment") {
        const auto from = j.at("from").get<std::vector<double>>();
        const auto to_re = j.at("to").at(0).get<std::vector<double>>();
        const auto to_im = j.at("to").at(1).get<std::vector<double>>();
        ComplexPoint a(from.size()), b(to_re.size());
        for (std::size_t l = 0; l < from.size(); ++l) a[l] = {from[l], 0.0};
        for (std::size_t l = 0; l < to_re.size(); ++l) b[l] = {to_re[l], to_im[l]};
        return make_segment(a, b);
    }
    if (kind == "polyline") {
        std::vector<ComplexPoint> vertices;
        for (const json& v : j.at("vertices")) {
            const auto re = v.at(0).get<std::vector<double>>();
            const auto im = v.at(1).get<std::vector<double>>();
            ComplexPoint z(re.size());
            for (std::size_t l = 0; l < re.size(); ++l) z[l] = {re[l], im[l]};
            vertices.push_back(std::move(z));
        }
        return make_polyline(vertices);
    }
    if (kind == "arc") {
        return make_arc(j.value("center", 0.0), j.at("radius").get<double>(),
                        j.value("angle0", 0.0), j.at("angle1").get<double>(),
                        j.value("segments", 32));
    }
    throw Error("unknown path generator: " + kind);
}

}  // namespace slicestar
