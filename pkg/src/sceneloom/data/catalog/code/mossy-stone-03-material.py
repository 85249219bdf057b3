"""Mossy Stone 03 Material generator (Materials)."""

PARAMS = {
    "size": 0.429,
    "detail": 1,
    "roughness": 0.015,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mossy Stone 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
