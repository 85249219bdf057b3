"""Mossy Stone 09 Material generator (Materials)."""

PARAMS = {
    "size": 2.615,
    "detail": 1,
    "roughness": 0.27,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mossy Stone 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
