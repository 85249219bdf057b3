"""Mossy Stone 08 Material generator (Materials)."""

PARAMS = {
    "size": 2.012,
    "detail": 5,
    "roughness": 0.268,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mossy Stone 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
