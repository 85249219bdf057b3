"""Cracked Clay 04 Material generator (Materials)."""

PARAMS = {
    "size": 3.231,
    "detail": 2,
    "roughness": 0.175,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cracked Clay 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
