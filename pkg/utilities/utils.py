import sys

from utilities import payloads
from utilities.get_template import get_message_from_template


def send_message(content, stream=None):
    stream = stream or sys.stdout
    stream.write(content if content.endswith("\n") else content + "\n")
    stream.flush()


def send_report(app, args, params, payload, template, variables, stream=None):
    """Emit the JSON envelope or the rendered text template, depending on --format."""
    if args.format == "json":
        document = payloads.envelope(
            app.settings,
            command=args.command,
            params=params,
            seed=getattr(args, "seed", app.settings.seed),
            prime=getattr(args, "prime", app.settings.prime),
            payload=payload,
        )
        send_message(payloads.dumps(document), stream)
    else:
        send_message(get_message_from_template(template, variables), stream)
