from . import colors
from .utils import send_message, send_report
from .settings import Settings, load_settings
from .get_template import get_message_from_template, get_message_from_dict
from .variables import (
    get_params_variables, get_component_variables, get_stratum_table_variables,
    get_property_variables, get_matrix_variables, get_invariants_variables,
    get_certificate_variables, get_lss_variables, get_threshold_variables,
    get_poset_variables, get_grid_variables, get_identity_variables,
    get_chain_variables, get_all_variables,
)
from .logging_handler import send_log
from .graph_file import parse_edge_list, read_edge_list
from . import payloads

__all__ = [
    "colors", "send_message", "send_report", "Settings", "load_settings",
    "get_message_from_template", "get_message_from_dict",
    "get_params_variables", "get_component_variables", "get_stratum_table_variables",
    "get_property_variables", "get_matrix_variables", "get_invariants_variables",
    "get_certificate_variables", "get_lss_variables", "get_threshold_variables",
    "get_poset_variables", "get_grid_variables", "get_identity_variables",
    "get_chain_variables", "get_all_variables", "send_log",
    "parse_edge_list", "read_edge_list", "payloads",
]
