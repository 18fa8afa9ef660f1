"""Sum-free sets from zero-one sequences: decoding, closed forms and verification."""

from ._sumfree import (
    StreamExhausted,
    InsufficientData,
    alpha_closed,
    automaton,
    automaton_accepts,
    base_change_element,
    base_digits,
    bitstream_from_base_change,
    check_growth_condition,
    decode,
    decode_elements,
    encode,
    h_cantor_closed,
    is_admissible,
    is_base_change_member,
    m_complement,
    mu_closed_form,
    rational_rank,
    regularity_profile,
    s_closed,
    s_fast_growth,
    scan_mu,
    suite_names,
    take,
    thue_morse,
    verify,
    word_value,
)

__all__ = [name for name in dir() if not name.startswith("_")]
