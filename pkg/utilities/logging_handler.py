import logging
from utilities.get_template import get_message_from_template

logger = logging.getLogger("orthoframes.reports")


def send_log(variables, logname, level=logging.INFO):
    message = get_message_from_template(logname, variables)
    logger.log(level, message.rstrip())
    return message
