import json
import os

from utilities.settings import ROOT

TEMPLATES_DIR = ROOT / "templates"


def content_format(content):
    return "\n".join(content) if isinstance(content, list) else content


def get_message_from_template(template_name, variables={}):
    file_path = TEMPLATES_DIR / f"{template_name}.json"
    if not os.path.exists(file_path):
        raise ValueError(f"{template_name} doesn't exist in report templates.")

    template = {}
    with open(file_path, "r", encoding="utf-8") as f:
        template = json.load(f)

    if not template:
        raise ValueError("Report template cannot be empty.")

    return convert_to_message(template, variables)


def get_message_from_dict(dictionary, variables={}):
    return convert_to_message(dictionary, variables)


def convert_to_message(template, variables={}):
    blocks = []
    # title, underlined
    if template.get("title"):
        title = content_format(template["title"]).format(**variables)
        blocks.append(f"{title}\n{'=' * len(title)}")
    if template.get("description"):
        blocks.append(content_format(template["description"]).format(**variables))
    # fields
    for field in template.get("fields") or []:
        name = content_format(field.get("name", "")).format(**variables)
        value = content_format(field.get("value", "")).format(**variables)
        if field.get("inline", False):
            blocks.append(f"{name}: {value}")
        else:
            blocks.append(f"{name}\n{value}")
    if template.get("footer"):
        blocks.append(content_format(template["footer"]).format(**variables))
    return "\n\n".join(block.rstrip() for block in blocks) + "\n"
