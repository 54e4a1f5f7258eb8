"""
Command line front end: system parsing, certificates and sweeps.
"""
from newton_centers.cli.certificate import (
    build_certificate,
    read_certificate,
    system_from_dict,
    validate_certificate,
    write_certificate,
)
from newton_centers.cli.parser import (
    format_expression,
    format_system,
    parse_system,
)
