#ifndef NETSAMPLE_STREAM_HPP
#define NETSAMPLE_STREAM_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netsample/access.hpp"

namespace netsample {

enum class Method { UNI, RW, FS, WRW };
enum class PiHatRule { Uniform, DegreeProportional, WeightProportional };

std::string to_string(Method m);
std::string to_string(PiHatRule r);

// Ordered record of sampled nodes with their query replies, traversed edges,
// and the non-normalized stationary weight of each sample.
struct SampleStream {
    Method method = Method::UNI;
    PiHatRule pi_hat_rule = PiHatRule::Uniform;
    std::uint64_t seed = 0;
    bool directed_graph = false;
    Visibility visibility = Visibility::SelfOnly;
    bool exhausted = false;

    std::vector<NodeReply> samples;
    std::vector<double> pi_hat;  // parallel to samples
    std::vector<Edge> traversed_edges;

    std::size_t size() const { return samples.size(); }

    // Line-oriented record format: one H header, "S ..." per sample,
    // "E u v" per traversed edge. Round-trips exactly.
    void save(std::ostream& out) const;
    static SampleStream load(std::istream& in);

    void save_file(const std::string& path) const;
    static SampleStream load_file(const std::string& path);
};

}  // namespace netsample

#endif
