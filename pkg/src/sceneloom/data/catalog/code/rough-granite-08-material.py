"""Rough Granite 08 Material generator (Materials)."""

PARAMS = {
    "size": 2.399,
    "detail": 2,
    "roughness": 0.158,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rough Granite 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
