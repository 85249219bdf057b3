"""Mossy Stone 07 Material generator (Materials)."""

PARAMS = {
    "size": 0.587,
    "detail": 3,
    "roughness": 0.793,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mossy Stone 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
