maximal = 0xaf43f1
unknown = 0xf6a630
below = 0x000000


def to_hex(color: int) -> str:
    return f"#{color:06x}"
