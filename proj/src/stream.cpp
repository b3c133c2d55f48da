#include "netsample/stream.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace netsample {

std::string to_string(Method m) {
    switch (m) {
        case Method::UNI: return "UNI";
        case Method::RW: return "RW";
        case Method::FS: return "FS";
        case Method::WRW: return "WRW";
    }
    return "?";
}

std::string to_string(PiHatRule r) {
    switch (r) {
        case PiHatRule::Uniform: return "uniform";
        case PiHatRule::DegreeProportional: return "degree";
        case PiHatRule::WeightProportional: return "weight";
    }
    return "?";
}

namespace {

Method method_from_string(const std::string& s) {
    if (s == "UNI") return Method::UNI;
    if (s == "RW") return Method::RW;
    if (s == "FS") return Method::FS;
    if (s == "WRW") return Method::WRW;
    throw std::runtime_error("bad method in stream file: " + s);
}

PiHatRule pihat_from_string(const std::string& s) {
    if (s == "uniform") return PiHatRule::Uniform;
    if (s == "degree") return PiHatRule::DegreeProportional;
    if (s == "weight") return PiHatRule::WeightProportional;
    throw std::runtime_error("bad pihat rule in stream file: " + s);
}

void put_opt(std::ostream& out, const std::optional<int>& v) {
    if (v) out << *v;
    else out << '.';
}

std::optional<int> get_opt(const std::string& tok) {
    if (tok == ".") return std::nullopt;
    return std::stoi(tok);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

void SampleStream::save(std::ostream& out) const {
    out << "# netsample stream v1\n";
    out << "H method=" << to_string(method) << " pihat=" << to_string(pi_hat_rule)
        << " seed=" << seed << " directed=" << (directed_graph ? 1 : 0)
        << " visibility=" << to_string(visibility)
        << " exhausted=" << (exhausted ? 1 : 0) << "\n";
    char buf[64];
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const NodeReply& r = samples[i];
        out << "S " << r.node << ' ' << r.label << ' ' << r.degree << ' ';
        put_opt(out, r.in_degree);
        out << ' ';
        put_opt(out, r.out_degree);
        std::snprintf(buf, sizeof buf, "%.17g", pi_hat[i]);
        out << ' ' << buf;
        for (const NeighborInfo& nb : r.neighbors) {
            char dir = nb.is_in && nb.is_out ? 'b' : (nb.is_in ? 'i' : 'o');
            out << ' ' << nb.id << ':' << dir << ':';
            put_opt(out, nb.degree);
            out << ':';
            put_opt(out, nb.in_degree);
            out << ':';
            put_opt(out, nb.out_degree);
            out << ':';
            put_opt(out, nb.label);
        }
        out << "\n";
    }
    for (const auto& [u, v] : traversed_edges) out << "E " << u << ' ' << v << "\n";
}

SampleStream SampleStream::load(std::istream& in) {
    SampleStream s;
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "H") {
            std::string kv;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw std::runtime_error("bad stream header");
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "method") s.method = method_from_string(val);
                else if (key == "pihat") s.pi_hat_rule = pihat_from_string(val);
                else if (key == "seed") s.seed = std::stoull(val);
                else if (key == "directed") s.directed_graph = val == "1";
                else if (key == "visibility") s.visibility = visibility_from_string(val);
                else if (key == "exhausted") s.exhausted = val == "1";
            }
            saw_header = true;
        } else if (tag == "S") {
            if (!saw_header) throw std::runtime_error("stream record before header");
            NodeReply r;
            r.visibility = s.visibility;
            std::string in_tok, out_tok;
            double ph;
            if (!(ls >> r.node >> r.label >> r.degree >> in_tok >> out_tok >> ph))
                throw std::runtime_error("bad S record");
            r.in_degree = get_opt(in_tok);
            r.out_degree = get_opt(out_tok);
            std::string nb_tok;
            while (ls >> nb_tok) {
                auto parts = split(nb_tok, ':');
                if (parts.size() != 6) throw std::runtime_error("bad neighbor token");
                NeighborInfo nb;
                nb.id = std::stoi(parts[0]);
                nb.is_in = parts[1] == "i" || parts[1] == "b";
                nb.is_out = parts[1] == "o" || parts[1] == "b";
                nb.degree = get_opt(parts[2]);
                nb.in_degree = get_opt(parts[3]);
                nb.out_degree = get_opt(parts[4]);
                nb.label = get_opt(parts[5]);
                r.neighbors.push_back(nb);
            }
            s.samples.push_back(std::move(r));
            s.pi_hat.push_back(ph);
        } else if (tag == "E") {
            NodeId u, v;
            if (!(ls >> u >> v)) throw std::runtime_error("bad E record");
            s.traversed_edges.emplace_back(u, v);
        } else {
            throw std::runtime_error("unknown stream record: " + tag);
        }
    }
    if (!saw_header) throw std::runtime_error("stream file has no header");
    return s;
}

void SampleStream::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write stream: " + path);
    save(out);
}

SampleStream SampleStream::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read stream: " + path);
    return load(in);
}

}  // namespace netsample
