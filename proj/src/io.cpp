#include "illumcover/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace illumcover {

namespace {

std::map<std::string, std::string> parse_header(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("bad header token '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

std::string require(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing header field '" + key + "'");
    return it->second;
}

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return true;
    }
    return false;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) out.push_back(item);
    return out;
}

template <typename Reader>
auto from_file(const std::string& path, Reader reader) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return reader(in);
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(const Cx& z) {
    std::string out = format_double(z.real());
    out += z.imag() < 0 ? "-" : "+";
    out += format_double(std::fabs(z.imag()));
    out += "i";
    return out;
}

Cx parse_complex(const std::string& s) {
    if (s.empty()) throw ParseError("empty complex literal");
    std::string t = s;
    bool has_i = t.back() == 'i';
    if (has_i) t.pop_back();
    // split at the last +/- that is not an exponent sign and not leading
    std::size_t split_pos = std::string::npos;
    for (std::size_t i = 1; i < t.size(); ++i) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E')
            split_pos = i;
    }
    try {
        if (!has_i) return Cx(std::stod(t), 0.0);
        if (split_pos == std::string::npos) {
            if (t.empty() || t == "+") return Cx(0.0, 1.0);
            if (t == "-") return Cx(0.0, -1.0);
            return Cx(0.0, std::stod(t));
        }
        double re = std::stod(t.substr(0, split_pos));
        std::string im = t.substr(split_pos);
        if (im == "+") return Cx(re, 1.0);
        if (im == "-") return Cx(re, -1.0);
        return Cx(re, std::stod(im));
    } catch (const std::exception&) {
        throw ParseError("cannot parse complex '" + s + "'");
    }
}

std::string write_cover(const CubeCover& cover) {
    std::ostringstream os;
    os << "n=" << cover.dim;
    if (cover.mode == Mode::Exact) {
        os << " eps=" << rational_string(cover.side) << " mode=exact\n";
        for (const auto& b : cover.bases) os << to_string(b) << "\n";
    } else {
        os << " eps=" << format_double(cover.side_f) << " mode=float margin="
           << format_double(cover.margin) << "\n";
        for (const auto& b : cover.bases_f) {
            for (std::size_t j = 0; j < b.size(); ++j)
                os << (j ? "," : "") << format_double(b[j]);
            os << "\n";
        }
    }
    if (cover.certificate) {
        const auto& cert = *cover.certificate;
        if (cert.verdict == Verdict::Covered) {
            os << "# verdict: covered\n";
        } else {
            os << "# verdict: uncovered ";
            if (cert.mode == Mode::Exact && cert.witness) {
                os << to_string(*cert.witness);
            } else {
                for (std::size_t j = 0; j < cert.witness_f.size(); ++j)
                    os << (j ? "," : "") << format_double(cert.witness_f[j]);
            }
            os << "\n";
        }
    }
    return os.str();
}

CubeCover read_cover(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty cover file");
    auto kv = parse_header(line);
    CubeCover cover;
    cover.dim = std::stoi(require(kv, "n"));
    std::string mode = require(kv, "mode");
    std::string eps = require(kv, "eps");
    if (mode == "exact") {
        cover.mode = Mode::Exact;
        cover.side = parse_rational(eps);
        cover.side_f = cover.side.convert_to<double>();
    } else if (mode == "float") {
        cover.mode = Mode::Float;
        cover.side_f = std::stod(eps);
        if (kv.count("margin")) cover.margin = std::stod(kv["margin"]);
    } else {
        throw ParseError("unknown cover mode '" + mode + "'");
    }

    while (next_content_line(in, line)) {
        if (line[0] == '#') {
            std::istringstream ls(line);
            std::string hash, label, verdict;
            ls >> hash >> label >> verdict;
            if (label != "verdict:") continue;
            CoverCertificate cert;
            cert.mode = cover.mode;
            cert.margin = cover.mode == Mode::Float ? cover.margin : 0.0;
            if (verdict == "covered") {
                cert.verdict = Verdict::Covered;
            } else if (verdict == "uncovered") {
                cert.verdict = Verdict::Uncovered;
                std::string pt;
                ls >> pt;
                if (!pt.empty()) {
                    if (cover.mode == Mode::Exact) {
                        cert.witness = parse_torus_point(pt);
                    } else {
                        for (const auto& c : split(pt, ','))
                            cert.witness_f.push_back(std::stod(c));
                    }
                }
            } else {
                throw ParseError("unknown verdict '" + verdict + "'");
            }
            cover.certificate = cert;
            continue;
        }
        if (cover.mode == Mode::Exact) {
            TorusPoint p = parse_torus_point(line);
            if (p.dim() != cover.dim) throw ParseError("base has wrong dimension: " + line);
            cover.bases.push_back(std::move(p));
        } else {
            std::vector<double> b;
            for (const auto& c : split(line, ',')) b.push_back(std::stod(c));
            if (static_cast<int>(b.size()) != cover.dim)
                throw ParseError("base has wrong dimension: " + line);
            cover.bases_f.push_back(std::move(b));
        }
    }
    return cover;
}

CubeCover read_cover_file(const std::string& path) {
    return from_file(path, [](std::istream& in) { return read_cover(in); });
}

std::string write_directions(const std::vector<ExtremalDirection>& dirs) {
    if (dirs.empty()) throw DomainError("write_directions: empty set");
    std::ostringstream os;
    os << "n=" << dirs[0].dim() << " kind=phases\n";
    for (const auto& d : dirs) os << to_string(d.phases) << "\n";
    return os.str();
}

std::vector<ExtremalDirection> read_directions(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty direction file");
    auto kv = parse_header(line);
    if (require(kv, "kind") != "phases") throw ParseError("expected kind=phases");
    const int n = std::stoi(require(kv, "n"));
    std::vector<ExtremalDirection> out;
    while (next_content_line(in, line)) {
        if (line[0] == '#') continue;
        TorusPoint p = parse_torus_point(line);
        if (p.dim() != n) throw ParseError("direction has wrong dimension: " + line);
        out.push_back({std::move(p)});
    }
    return out;
}

std::vector<ExtremalDirection> read_directions_file(const std::string& path) {
    return from_file(path, [](std::istream& in) { return read_directions(in); });
}

namespace {

std::string generator_body(const std::vector<CxVec>& vecs, Field field) {
    std::ostringstream os;
    for (const auto& v : vecs) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (c) os << ",";
            if (field == Field::Real)
                os << format_double(v[c].real());
            else
                os << format_complex(v[c]);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string write_generators(const Generators& g) {
    std::ostringstream os;
    os << "field=" << (g.field == Field::Real ? "real" : "complex") << " n=" << g.n << "\n"
       << generator_body(g.vecs, g.field);
    return os.str();
}

std::string write_canonical(const CanonicalZonotope& k) {
    std::ostringstream os;
    os << "field=" << (k.field == Field::Real ? "real" : "complex") << " n=" << k.n << " lambda=";
    for (std::size_t i = 0; i < k.lambda.size(); ++i) os << (i ? "," : "") << k.lambda[i];
    os << "\n" << generator_body(k.gens, k.field);
    return os.str();
}

Generators read_generators(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty generator file");
    auto kv = parse_header(line);
    Generators g;
    std::string field = require(kv, "field");
    if (field == "real")
        g.field = Field::Real;
    else if (field == "complex")
        g.field = Field::Complex;
    else
        throw ParseError("unknown field '" + field + "'");
    g.n = std::stoi(require(kv, "n"));
    while (next_content_line(in, line)) {
        if (line[0] == '#') continue;
        CxVec v;
        for (const auto& c : split(line, ',')) v.push_back(parse_complex(c));
        if (static_cast<int>(v.size()) != g.n)
            throw ParseError("generator has wrong dimension: " + line);
        if (g.field == Field::Real)
            for (const auto& z : v)
                if (z.imag() != 0.0) throw ParseError("complex entry in a real generator file");
        g.vecs.push_back(std::move(v));
    }
    return g;
}

Generators read_generators_file(const std::string& path) {
    return from_file(path, [](std::istream& in) { return read_generators(in); });
}

std::string write_coefficient_directions(const DirectionSet& ds) {
    std::ostringstream os;
    os << "n=" << ds.n << " kind=coefficients\n";
    for (const auto& d : ds.dirs) {
        for (std::size_t j = 0; j < d.coeffs.size(); ++j)
            os << (j ? "," : "") << format_complex(d.coeffs[j]);
        os << "\n";
    }
    return os.str();
}

DirectionSet read_coefficient_directions(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty direction file");
    auto kv = parse_header(line);
    if (require(kv, "kind") != "coefficients") throw ParseError("expected kind=coefficients");
    DirectionSet ds;
    ds.n = std::stoi(require(kv, "n"));
    while (next_content_line(in, line)) {
        if (line[0] == '#') continue;
        Direction d;
        for (const auto& c : split(line, ',')) d.coeffs.push_back(parse_complex(c));
        if (static_cast<int>(d.coeffs.size()) != ds.n + 1)
            throw ParseError("coefficient direction needs n+1 entries: " + line);
        ds.dirs.push_back(std::move(d));
    }
    return ds;
}

DirectionSet read_coefficient_directions_file(const std::string& path) {
    return from_file(path, [](std::istream& in) { return read_coefficient_directions(in); });
}

std::string write_zonoid(const DiscreteZonoid& z) {
    std::ostringstream os;
    os << "n=" << z.n << " kind=atoms\n";
    for (std::size_t k = 0; k < z.atoms.size(); ++k) {
        os << format_double(z.weights[k]);
        for (const auto& c : z.atoms[k]) os << "," << format_complex(c);
        os << "\n";
    }
    return os.str();
}

DiscreteZonoid read_zonoid(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty zonoid file");
    auto kv = parse_header(line);
    if (require(kv, "kind") != "atoms") throw ParseError("expected kind=atoms");
    const int n = std::stoi(require(kv, "n"));
    std::vector<CxVec> atoms;
    std::vector<double> weights;
    while (next_content_line(in, line)) {
        if (line[0] == '#') continue;
        auto parts = split(line, ',');
        if (static_cast<int>(parts.size()) != n + 1)
            throw ParseError("atom line needs weight plus n entries: " + line);
        weights.push_back(std::stod(parts[0]));
        CxVec a;
        for (int c = 1; c <= n; ++c) a.push_back(parse_complex(parts[c]));
        atoms.push_back(std::move(a));
    }
    return make_discrete_zonoid(n, std::move(atoms), std::move(weights));
}

DiscreteZonoid read_zonoid_file(const std::string& path) {
    return from_file(path, [](std::istream& in) { return read_zonoid(in); });
}

std::string write_clusters(const std::vector<Cluster>& clusters) {
    std::ostringstream os;
    os << "clusters=" << clusters.size() << "\n";
    for (const auto& cl : clusters) {
        os << cl.representative << ":";
        for (int i : cl.members) os << " " << i;
        os << "\n";
    }
    return os.str();
}

std::vector<Cluster> read_clusters(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty cluster file");
    auto kv = parse_header(line);
    const int count = std::stoi(require(kv, "clusters"));
    std::vector<Cluster> out;
    while (next_content_line(in, line)) {
        if (line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("cluster line needs 'rep: members'");
        Cluster cl;
        cl.representative = std::stoi(line.substr(0, colon));
        std::istringstream ms(line.substr(colon + 1));
        int idx;
        while (ms >> idx) cl.members.push_back(idx);
        out.push_back(std::move(cl));
    }
    if (static_cast<int>(out.size()) != count)
        throw ParseError("cluster count mismatch with header");
    return out;
}

std::vector<Cluster> read_clusters_file(const std::string& path) {
    return from_file(path, [](std::istream& in) { return read_clusters(in); });
}

void atomic_write_file(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write '" + tmp + "'");
        out << content;
        if (!out.good()) throw IoError("write failed for '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

}  // namespace illumcover
