import json
import sys

import jsonschema

schema_path, *reports = sys.argv[1:]
with open(schema_path) as fh:
    schema = json.load(fh)
for path in reports:
    with open(path) as fh:
        jsonschema.validate(json.load(fh), schema)
    print(f"{path}: ok")
