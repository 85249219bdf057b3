"""Polished Marble 09 Material generator (Materials)."""

PARAMS = {
    "size": 2.164,
    "detail": 3,
    "roughness": 0.685,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Polished Marble 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
