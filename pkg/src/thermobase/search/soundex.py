"""Classic 4-character Soundex phonetic code.

Used as the quick-search fallback when a name query has no substring
hits: compounds whose name sounds like the query are returned instead.
"""

from __future__ import annotations

_CODES = {
    **dict.fromkeys("bfpv", "1"),
    **dict.fromkeys("cgjkqsxz", "2"),
    **dict.fromkeys("dt", "3"),
    "l": "4",
    **dict.fromkeys("mn", "5"),
    "r": "6",
}


def soundex(name: str) -> str:
    """Classic algorithm: first letter plus three digits.

    Adjacent letters with the same code collapse; 'h' and 'w' do not
    separate same-coded letters, vowels do. Non-letters are ignored;
    an input with no letters codes to the empty string.
    """
    letters = [ch for ch in name.lower() if ch.isalpha()]
    if not letters:
        return ""
    first = letters[0]
    digits: list[str] = []
    prev_code = _CODES.get(first, "")
    for ch in letters[1:]:
        code = _CODES.get(ch, "")
        if ch in "hw":
            continue  # transparent: previous code survives
        if code and code != prev_code:
            digits.append(code)
        prev_code = code
        if len(digits) >= 3:
            break
    return (first.upper() + "".join(digits) + "000")[:4]
