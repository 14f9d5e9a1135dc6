#pragma once

#include "newsrec/rng.h"
#include "newsrec/types.h"

#include <cstddef>
#include <span>
#include <vector>

namespace newsrec
{

/// Directed overlay: every user has exactly S authorities; followers are
/// the reverse adjacency and are kept consistent by every mutation.
class AuthorityNetwork
{
public:
    AuthorityNetwork() = default;

    /// Each user gets S distinct authorities drawn uniformly from the others.
    static AuthorityNetwork random(std::size_t users, std::size_t per_user, Rng& rng);

    /// Throws std::invalid_argument if the lists are not a valid S-regular
    /// authority assignment.
    static AuthorityNetwork from_lists(const std::vector<std::vector<UserId>>& authorities);

    std::size_t users() const { return m_followers.size(); }
    std::size_t per_user() const { return m_per_user; }

    /// Authorities of `user`, sorted by id.
    std::span<const UserId> authorities(UserId user) const
    {
        return {m_authorities.data() + std::size_t(user) * m_per_user, m_per_user};
    }
    std::span<const UserId> followers(UserId user) const { return m_followers.at(user); }

    bool is_authority(UserId user, UserId candidate) const;

    /// Replaces the whole authority set of `user`.
    void set_authorities(UserId user, std::vector<UserId> authorities);

    /// Swaps one authority for a user that is not yet an authority.
    void replace(UserId user, UserId old_authority, UserId new_authority);

    /// Throws std::logic_error describing the first violated invariant.
    void check_consistency() const;

private:
    AuthorityNetwork(std::size_t users, std::size_t per_user);
    void validate_set(UserId user, std::span<const UserId> set) const;

    std::size_t m_per_user = 0;
    std::vector<UserId> m_authorities;
    std::vector<std::vector<UserId>> m_followers;
};

} // namespace newsrec
