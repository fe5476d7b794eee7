#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fedigraph {

using NodeId = std::uint32_t;
using InstanceId = std::uint32_t;
using EdgeIndex = std::uint64_t;

inline constexpr NodeId kInvalidNode = static_cast<NodeId>(-1);

/// Error raised for invalid inputs or malformed data. Carries a
/// human-readable message; file readers prefix it with a line number.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A (user, instance) pair, the atomic vertex of every network view.
/// The same user string under two different instances is two distinct nodes.
struct FederatedNode {
    std::string user;
    std::string instance;

    /// Ordering is (instance, user) so that nodes of one instance are
    /// contiguous in every sorted node list.
    friend std::strong_ordering operator<=>(const FederatedNode& a, const FederatedNode& b) {
        if (auto c = a.instance <=> b.instance; c != 0) return c;
        return a.user <=> b.user;
    }
    friend bool operator==(const FederatedNode&, const FederatedNode&) = default;
};

struct EdgeRecord {
    std::string src_user;
    std::string src_instance;
    std::string dst_user;
    std::string dst_instance;

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

} // namespace fedigraph
